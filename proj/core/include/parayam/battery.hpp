#pragma once

#include "parayam/report.hpp"

namespace parayam {

// Runs the full acceptance battery over the builtin models: the frozen
// connection and curvature tables, the structure classification, the soliton
// and identity checks, the bulk self-tests of the symbolic layer, and the
// known discrepancies in the published tables (reported as warnings with
// explicit witnesses, never as failures).  One check per criterion, in order.
ReportDocument reproduce_paper_battery();

} // namespace parayam
