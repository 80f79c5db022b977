// Runs the acceptance battery and prints one pass/fail line per criterion.
// Exits nonzero if any criterion fails.

#include "parayam/battery.hpp"

#include <iostream>

int main() {
    const parayam::ReportDocument doc = parayam::reproduce_paper_battery();

    int failed = 0;
    for (const auto& section : doc.sections) {
        bool ok = true;
        for (const auto& check : section.checks) ok = ok && !check.failed();
        if (!ok) ++failed;
        std::cout << (ok ? "pass" : "FAIL") << "  " << section.heading << "\n";
    }
    const std::size_t total = doc.sections.size();
    std::cout << "acceptance: " << (total - failed) << "/" << total << " criteria passed";
    if (!doc.warnings.empty())
        std::cout << " (" << doc.warnings.size() << " expected warnings recorded)";
    std::cout << "\n";
    return failed == 0 ? 0 : 1;
}
