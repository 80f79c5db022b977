#pragma once

#include "parayam/model_bundle.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace parayam {

// Catalog of ready-made models addressed as "builtin:<name>[?key=value&...]":
//   example_5_1            three-dimensional para-Sasakian frame model with a
//                          constant parameter u (override: ?u=<rational>)
//   example_5_2            chart model with exponential metric and a
//                          deliberately defective structure (diagnostic mode)
//   flat_para_cosymplectic flat chart model carrying a para-cosymplectic
//                          structure and the Euler field
bool is_builtin_uri(std::string_view uri);
std::vector<std::string> builtin_names();
ModelBundle make_builtin(std::string_view uri);

} // namespace parayam
