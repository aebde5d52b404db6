#pragma once

#include <string>
#include <vector>

namespace lamecn::checks {

struct CheckResult {
    std::string name;
    bool passed;
    double measured;  ///< worst observed discrepancy
    double limit;     ///< what it must stay below
    std::string detail;
};

/// Run every module invariant suite (special-function identities, multiplier
/// algebra, band structure, oracle-vs-closed-form agreement, reconstruction).
/// `tol` is the ODE integration tolerance used by the oracle-backed checks;
/// it must be positive. Numerical failures inside a check mark that check
/// failed instead of propagating.
std::vector<CheckResult> run_all(double tol);

}  // namespace lamecn::checks
