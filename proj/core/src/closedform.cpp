#include "lamecn/closedform.hpp"

#include <cmath>

#include "lamecn/specfun.hpp"

namespace lamecn::closedform {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880168872420969808;

// cos(2 theta) this close to zero counts as a band edge (stable).
constexpr double kEdgeTie = 1e-15;

double peak_growth_value() {
    static const double v = (2.0 / period_t()) * std::log1p(kSqrt2);
    return v;
}

}  // namespace

double period_t() {
    static const double t =
        4.0 * specfun::complete_elliptic_k(
                  specfun::EllipticModulus(specfun::inv_sqrt2));
    return t;
}

HypergeometricParams reduce_to_hypergeometric(double kappa) {
    if (!std::isfinite(kappa) || kappa < 0.0) {
        throw std::domain_error("kappa must be finite and >= 0");
    }
    const double s = std::sqrt(1.0 + 8.0 * kappa * kappa);
    HypergeometricParams p;
    p.kappa = kappa;
    p.alpha = 0.125 * (1.0 + s);
    p.beta = 0.25 - p.alpha;  // keeps alpha + beta == 1/4 exactly
    p.gamma_p = 0.75;
    p.delta = 0.25;
    p.diff = 0.25 * s;
    p.theta = specfun::pi * p.diff;
    return p;
}

ConnectionCoefficients connection_coefficients(const HypergeometricParams& p) {
    using specfun::gamma;
    using specfun::reciprocal_gamma;
    const double g = p.gamma_p;
    const double d = p.delta;
    // Numerator Gammas are constants (3/4, 1/2, -1/2, 5/4): never at a pole.
    const double g_g = gamma(g);
    const double g_2mg = gamma(2.0 - g);
    const double g_gmd = gamma(g - d);
    const double g_dmg = gamma(d - g);
    ConnectionCoefficients cc;
    cc.A = g_g * g_gmd * reciprocal_gamma(g - p.alpha) *
           reciprocal_gamma(g - p.beta);
    cc.B = g_g * g_dmg * reciprocal_gamma(p.alpha) * reciprocal_gamma(p.beta);
    cc.C = g_2mg * g_gmd * reciprocal_gamma(1.0 - p.alpha) *
           reciprocal_gamma(1.0 - p.beta);
    cc.D = g_2mg * g_dmg * reciprocal_gamma(p.alpha + 1.0 - g) *
           reciprocal_gamma(p.beta + 1.0 - g);
    return cc;
}

TransferMatrix transfer_matrix(const HypergeometricParams& p) {
    using specfun::gamma;
    using specfun::reciprocal_gamma;
    const double g = p.gamma_p;
    const double diag = kSqrt2 * specfun::cos_pi(p.diff);
    const double g_2mg = gamma(2.0 - g);
    const double g_g = gamma(g);
    const double t12 = 8.0 * specfun::pi * g_2mg * g_2mg *
                       reciprocal_gamma(1.0 - p.alpha) *
                       reciprocal_gamma(1.0 - p.beta) *
                       reciprocal_gamma(1.0 + p.alpha - g) *
                       reciprocal_gamma(1.0 + p.beta - g);
    const double t21 = 8.0 * specfun::pi * g_g * g_g *
                       reciprocal_gamma(p.alpha) * reciprocal_gamma(p.beta) *
                       reciprocal_gamma(g - p.alpha) *
                       reciprocal_gamma(g - p.beta);
    return {diag, t12, t21, diag};
}

FloquetResult multipliers_exponents(double kappa) {
    const HypergeometricParams p = reduce_to_hypergeometric(kappa);
    const double t = period_t();
    const double ct = specfun::cos_pi(p.diff);
    double c2t = specfun::cos_pi(2.0 * p.diff);
    if (std::fabs(c2t) <= kEdgeTie) {
        c2t = 0.0;  // band-edge tie: classified stable
    }
    const std::complex<double> root =
        (c2t >= 0.0) ? std::complex<double>(std::sqrt(c2t), 0.0)
                     : std::complex<double>(0.0, std::sqrt(-c2t));
    FloquetResult r;
    r.lambda1 = kSqrt2 * ct + root;
    r.lambda2 = kSqrt2 * ct - root;
    r.rho1 = r.lambda1 * r.lambda1;
    r.rho2 = r.lambda2 * r.lambda2;
    r.mu1 = (2.0 / t) * std::log(r.lambda1);
    r.mu2 = (2.0 / t) * std::log(r.lambda2);
    // max of the real parts; the zero floor only absorbs rounding noise of
    // order 1e-16 in stable bands.
    r.mu_tilde = std::max({r.mu1.real(), r.mu2.real(), 0.0});
    return r;
}

double growth_rate(double kappa) {
    const HypergeometricParams p = reduce_to_hypergeometric(kappa);
    const double c2t = specfun::cos_pi(2.0 * p.diff);
    if (c2t <= kEdgeTie) {
        return 0.0;  // stable band or edge tie
    }
    const double arg =
        kSqrt2 * std::fabs(specfun::cos_pi(p.diff)) + std::sqrt(c2t);
    const double v = (2.0 / period_t()) * std::log(arg);
    return v > 0.0 ? v : 0.0;
}

AmplificationBand amplification_band(int n) {
    if (n < 1) {
        throw std::domain_error("band index must be >= 1");
    }
    const double nn = n;
    AmplificationBand b;
    b.n = n;
    b.kappa_lo = std::sqrt(nn * (2.0 * nn - 1.0));
    b.kappa_hi = std::sqrt(nn * (2.0 * nn + 1.0));
    b.kappa_peak = std::sqrt(2.0 * nn * nn - 0.125);
    b.mu_peak = peak_growth_value();
    return b;
}

std::vector<AmplificationBand> locate_bands(double kappa_max) {
    if (!std::isfinite(kappa_max) || kappa_max < 0.0) {
        throw std::domain_error("kappa_max must be finite and >= 0");
    }
    std::vector<AmplificationBand> bands;
    for (int n = 1;; ++n) {
        AmplificationBand b = amplification_band(n);
        if (b.kappa_lo > kappa_max) {
            break;
        }
        bands.push_back(b);
    }
    return bands;
}

}  // namespace lamecn::closedform
