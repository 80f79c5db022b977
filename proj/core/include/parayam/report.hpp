#pragma once

#include "parayam/check_report.hpp"
#include "parayam/manifold.hpp"

#include <string>
#include <utility>
#include <vector>

namespace parayam {

// One block of output: named values plus checks, all rendered against the
// section model's symbol table (tensor residuals carry their own model).
struct ReportSection {
    std::string heading;
    ModelPtr model;
    std::vector<std::pair<std::string, ScalarExpr>> values;
    std::vector<CheckReport> checks;
};

struct ReportDocument {
    std::string command;
    std::string input;
    std::vector<ReportSection> sections;
    std::vector<std::string> warnings;

    bool ok() const;                      // no check failed
    bool has_hypothesis_warnings() const; // some check was vacuously satisfied
};

// Deterministic renderings: two runs over the same input are byte-identical.
std::string emit_text(const ReportDocument& doc);
std::string emit_json(const ReportDocument& doc);

// 0 when ok (hypothesis-not-satisfied counts as pass with a warning), 1 otherwise.
int exit_code(const ReportDocument& doc);

} // namespace parayam
