#pragma once

#include "parayam/manifold.hpp"
#include "parayam/paracontact.hpp"
#include "parayam/tensor.hpp"

#include <map>
#include <optional>
#include <string>

namespace parayam {

// A model plus everything a workload file or builtin can attach to it:
// an optional structure, named fields, and default soliton settings.
struct ModelBundle {
    ModelPtr model;
    std::optional<ParacontactStructure> structure;
    std::map<std::string, TensorField> vector_fields;
    std::map<std::string, ScalarExpr> scalar_fields;

    struct SolitonSection {
        std::string potential; // "xi", "grad:<name or expr>", or a vector field name
        std::optional<ScalarExpr> lambda;
        std::optional<ScalarExpr> delta;
        std::optional<ScalarExpr> u;
    };
    std::optional<SolitonSection> soliton;

    std::string origin; // path or builtin URI, for diagnostics
};

} // namespace parayam
