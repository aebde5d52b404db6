#pragma once

#include <stdexcept>

namespace lamecn {

/// Gamma-function argument landed on a nonpositive integer.
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// An iteration (series summation, step-size controller) failed to reach
/// its tolerance within the allotted budget.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lamecn
