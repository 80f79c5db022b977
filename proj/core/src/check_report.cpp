#include "parayam/check_report.hpp"

namespace parayam {

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::HypothesisNotSatisfied: return "hypothesis-not-satisfied";
    }
    return "unknown";
}

void CheckReport::require_zero(std::string label, ScalarExpr value) {
    const bool zero = value.is_zero();
    if (!zero && status != CheckStatus::Fail) status = CheckStatus::Fail;
    residuals.push_back({std::move(label), std::move(value), zero});
}

void CheckReport::require_zero(std::string label, TensorField value) {
    const bool zero = value.is_zero();
    if (!zero && status != CheckStatus::Fail) status = CheckStatus::Fail;
    residuals.push_back({std::move(label), std::move(value), zero});
}

void CheckReport::record(std::string label, ScalarExpr value) {
    const bool zero = value.is_zero();
    residuals.push_back({std::move(label), std::move(value), zero});
}

void CheckReport::record(std::string label, TensorField value) {
    const bool zero = value.is_zero();
    residuals.push_back({std::move(label), std::move(value), zero});
}

void CheckReport::add_derived(std::string label, ScalarExpr value) {
    derived.emplace_back(std::move(label), std::move(value));
}

void CheckReport::add_flag(std::string label, bool value) {
    flags.emplace_back(std::move(label), value);
}

CheckReport CheckReport::hypothesis_not_satisfied(std::string id, std::string why) {
    CheckReport r;
    r.id = std::move(id);
    r.status = CheckStatus::HypothesisNotSatisfied;
    r.note = std::move(why);
    return r;
}

} // namespace parayam
