#pragma once

#include <string>
#include <vector>

namespace defdirac {

struct Check {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    bool pass = false;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Named verification suites. Tolerances are pinned in the implementation.
SuiteReport verify_eckart();
SuiteReport verify_susy();       // cross-validation sweep + degeneracy
SuiteReport verify_limits();     // nu->0, nonrelativistic, comparison-value reconciliation
SuiteReport verify_algebra();
SuiteReport verify_corrections();// quadratic consistency, fine-structure checks, 1/c^2 slopes

std::vector<SuiteReport> verify_all();

std::string format_report(const SuiteReport& r);

} // namespace defdirac
