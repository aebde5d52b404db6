#pragma once

#include "lamecn/closedform.hpp"
#include "lamecn/errors.hpp"

namespace lamecn::oracle {

/// Solution value, derivative and position for X'' + kappa^2 cn^2(z) X = 0.
struct State {
    double x;   ///< X(z)
    double xp;  ///< dX/dz
    double z;
};

/// State-transition matrix over one full period T. det = 1 (Wronskian).
struct MonodromyMatrix {
    double m11;
    double m12;
    double m21;
    double m22;
};

/// Advance a state from z0 to z1 under the Lame equation with an adaptive
/// embedded Runge-Kutta 5(4) pair at mixed absolute/relative tolerance tol.
/// Deterministic for fixed inputs. Throws std::domain_error on tol <= 0 and
/// convergence_error if the step controller stalls.
State integrate_lame(double kappa, double z0, double z1, State s, double tol);

/// Monodromy matrix: columns are the period-T images of the unit states
/// (1,0) and (0,1) integrated from z = 0.
MonodromyMatrix monodromy(double kappa, double tol);

/// Multipliers, exponents and growth rate from the monodromy matrix:
/// rho = (tr +- sqrt(tr^2-4))/2, mu = (1/T) Log rho. A trace within 1e-9 of
/// +-2 is treated as the defective band-edge case (repeated multiplier,
/// real exponent ln|tr/2|/T).
closedform::FloquetResult numeric_exponents(double kappa, double tol);

/// Numerical half-period coefficient transfer: integrates over [K, K+T/2]
/// (consecutive zeros of cn) and converts the endpoint states to (c1, c2)
/// coordinates via c1 = X, c2 = sqrt2 dX/dz, the sign fixed by the local
/// slope of y = cn^4 at the start of each branch.
closedform::TransferMatrix halfperiod_transfer_numeric(double kappa, double tol);

/// Evaluate X(z) = c1 phi1 + c2 phi2 from the hypergeometric basis on the
/// monotonic branch z in [K, 2K] anchored at the cn zero z = K (y rising
/// from 0 to 1). Uses the y=1 basis with connection coefficients once
/// y > 1/2. Throws std::domain_error outside the branch.
double reconstruct_solution(double kappa, double c1, double c2, double z);

}  // namespace lamecn::oracle
