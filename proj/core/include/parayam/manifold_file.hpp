#pragma once

#include "parayam/model_bundle.hpp"

#include <string>
#include <string_view>

namespace parayam {

// Text workload format: brace-delimited sections in fixed order
//
//   manifold { name dimension mode basis }   (required, first)
//   symbols  { name [dir=expr ...] per line }
//   metric   { n rows of n comma-separated expressions }   (required)
//   brackets { "i j k : expr" lines, frame mode only; c^k_ij, 1-based,
//              the antisymmetric mirror is filled in automatically }
//   structure{ mode, phi matrix block, xi row, eta row }
//   fields   { "vector name : c1, ..., cn" / "scalar name : expr" }
//   soliton  { potential, lambda, delta, u }
//
// '#' starts a comment anywhere on a line.  Parse errors carry line and
// column positions; semantic errors name the offending section.
ModelBundle parse_model_text(std::string_view text, std::string origin = "<memory>");
ModelBundle load_model_file(const std::string& path);

// Accepts either a file path or a "builtin:" URI.
ModelBundle load_input(const std::string& path_or_uri);

// Canonical text for a bundle; parsing it back reproduces the bundle
// (same symbols in the same order, identical components).
std::string write_model_text(const ModelBundle& bundle);

} // namespace parayam
