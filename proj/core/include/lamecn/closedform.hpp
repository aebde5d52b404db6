#pragma once

#include <complex>
#include <vector>

#include "lamecn/errors.hpp"

namespace lamecn::closedform {

/// Parameters of the hypergeometric equation obtained from
/// X'' + kappa^2 cn^2(z, 1/sqrt2) X = 0 by the substitution y = cn^4:
///   y(1-y) X'' + (gamma_p - (alpha+beta+1) y) X' - alpha beta X = 0
/// with gamma_p = 3/4 and alpha, beta = (1 +- sqrt(1+8 kappa^2))/8.
struct HypergeometricParams {
    double kappa;    ///< coupling, >= 0
    double alpha;    ///< (1 + sqrt(1+8 kappa^2))/8
    double beta;     ///< delta - alpha; alpha + beta == delta exactly
    double gamma_p;  ///< 3/4
    double delta;    ///< alpha + beta = 1/4
    double diff;     ///< alpha - beta = sqrt(1+8 kappa^2)/4, >= 1/4
    double theta;    ///< pi * diff
};

/// Coefficients connecting the y=0 solution basis (phi1, phi2) to the
/// y=1 basis (phi3, phi4): phi1 = A phi3 + B phi4, phi2 = C phi3 + D phi4.
struct ConnectionCoefficients {
    double A;
    double B;
    double C;
    double D;
};

/// Half-period map of the (c1, c2) solution coefficients. Unimodular,
/// with equal diagonal entries sqrt(2) cos(pi (alpha-beta)).
struct TransferMatrix {
    double t11;
    double t12;
    double t21;
    double t22;
};

/// Floquet data for one kappa: half-period eigenvalues lambda, full-period
/// multipliers rho = lambda^2, characteristic exponents mu = (2/T) Log lambda,
/// and the growth rate mu_tilde = max(Re mu) >= 0.
struct FloquetResult {
    std::complex<double> lambda1;
    std::complex<double> lambda2;
    std::complex<double> rho1;
    std::complex<double> rho2;
    std::complex<double> mu1;
    std::complex<double> mu2;
    double mu_tilde;
};

/// One parametric-amplification band: kappa in (kappa_lo, kappa_hi) with
/// the growth-rate maximum mu_peak attained at kappa_peak.
struct AmplificationBand {
    int n;
    double kappa_lo;    ///< sqrt(n(2n-1))
    double kappa_hi;    ///< sqrt(n(2n+1))
    double kappa_peak;  ///< sqrt(2n^2 - 1/8)
    double mu_peak;     ///< (2 sqrt(pi)/Gamma^2(1/4)) ln(1+sqrt2), same for all n
};

/// Period T = 4K(1/sqrt2) = Gamma^2(1/4)/sqrt(pi) of the elliptic cosine.
double period_t();

/// Map kappa to the reduced-equation parameters. kappa must be finite, >= 0.
HypergeometricParams reduce_to_hypergeometric(double kappa);

/// Connection coefficients A, B, C, D. Denominator Gamma poles are handled
/// through the reciprocal Gamma, so affected coefficients vanish cleanly
/// (B = 0 at kappa = 0, for instance).
ConnectionCoefficients connection_coefficients(const HypergeometricParams& p);

/// Half-period coefficient transfer matrix. det t = 1 up to rounding.
TransferMatrix transfer_matrix(const HypergeometricParams& p);

/// Closed-form multipliers and characteristic exponents,
///   lambda_{1,2} = sqrt2 cos(pi(alpha-beta)) +- sqrt(cos(2 pi(alpha-beta)))
/// with the principal complex square root when the radicand is negative
/// (stable band: |rho| = 1 there).
FloquetResult multipliers_exponents(double kappa);

/// Growth rate mu_tilde(kappa): positive strictly inside an amplification
/// band, zero otherwise. Band-edge ties (radicand within 1e-15 of zero)
/// count as stable.
double growth_rate(double kappa);

/// Band n >= 1 with edges sqrt(n(2n-1)), sqrt(n(2n+1)), peak location
/// sqrt(2n^2 - 1/8) and the n-independent peak value.
AmplificationBand amplification_band(int n);

/// All bands whose lower edge does not exceed kappa_max, in order.
std::vector<AmplificationBand> locate_bands(double kappa_max);

}  // namespace lamecn::closedform
