#pragma once

#include "parayam/expr.hpp"
#include "parayam/tensor.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace parayam {

enum class CheckStatus {
    Pass,
    Fail,
    // The check is an implication whose hypothesis the input does not
    // satisfy; reported distinctly so vacuous cases never pollute pass
    // rates, and counted as a pass with a warning in exit codes.
    HypothesisNotSatisfied,
};

std::string to_string(CheckStatus s);

// One named residual: an expression or tensor that must normalize to zero
// for the enclosing check to pass.
struct ResidualItem {
    std::string label;
    std::variant<ScalarExpr, TensorField> value;
    bool zero = false;
};

// Outcome of one verification step (axiom battery, soliton equation,
// a named identity, an acceptance criterion).
struct CheckReport {
    std::string id;
    ModelPtr model; // symbol context for rendering scalar residuals
    CheckStatus status = CheckStatus::Pass;
    std::vector<ResidualItem> residuals;
    std::vector<std::pair<std::string, ScalarExpr>> derived; // extracted λ, σ, ρ, k, ...
    std::vector<std::pair<std::string, bool>> flags;         // named conclusions
    std::string note;

    bool passed() const { return status == CheckStatus::Pass; }
    bool failed() const { return status == CheckStatus::Fail; }

    // Records a residual and downgrades the status to Fail when nonzero.
    void require_zero(std::string label, ScalarExpr value);
    void require_zero(std::string label, TensorField value);
    // Records without affecting the status (informational residuals).
    void record(std::string label, ScalarExpr value);
    void record(std::string label, TensorField value);

    void add_derived(std::string label, ScalarExpr value);
    void add_flag(std::string label, bool value);

    static CheckReport hypothesis_not_satisfied(std::string id, std::string why);
};

} // namespace parayam
