#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wpl {

struct CheckResult {
    std::string name;
    bool passed = false;
    double observed = 0.0;  // worst metric across the criterion's sub-checks
    double bound = 0.0;     // the tolerance it must stay under
    std::string detail;
};

// Runs the full invariant battery at the reference setup (n = 1024, domain
// [-40, 40], hbar = m0 = 1, c = 10, a = 1, p_x = 1, v = 1): spreading law,
// closed-form agreement, convolution cross-check, rigid translation,
// unitarity/group property, Dirac identities, kinematics consistency. Each
// entry is one criterion with its worst observed metric.
std::vector<CheckResult> run_acceptance_checks();

bool all_passed(const std::vector<CheckResult>& results);

/// One pass/fail line per criterion.
void print_check_results(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace wpl
