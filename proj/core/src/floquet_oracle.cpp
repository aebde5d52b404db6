#include "lamecn/floquet_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "lamecn/specfun.hpp"

namespace lamecn::oracle {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880168872420969808;

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0,
                          8.0 / 9.0, 1.0, 1.0};
constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0,
                 kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0,
                 kA63 = 46732.0 / 5247.0, kA64 = 49.0 / 176.0,
                 kA65 = -5103.0 / 18656.0;
constexpr double kB1 = 35.0 / 384.0, kB3 = 500.0 / 1113.0,
                 kB4 = 125.0 / 192.0, kB5 = -2187.0 / 6784.0,
                 kB6 = 11.0 / 84.0;
// 5th-order minus embedded 4th-order weights.
constexpr double kE1 = 71.0 / 57600.0, kE3 = -71.0 / 16695.0,
                 kE4 = 71.0 / 1920.0, kE5 = -17253.0 / 339200.0,
                 kE6 = 22.0 / 525.0, kE7 = -1.0 / 40.0;

struct LameRhs {
    double kappa2;
    specfun::EllipticModulus modulus;

    void operator()(double z, const double y[2], double dy[2]) const {
        const specfun::JacobiTriple j = specfun::jacobi_elliptic(z, modulus);
        dy[0] = y[1];
        dy[1] = -kappa2 * (j.cn * j.cn) * y[0];
    }
};

// Adaptive RK5(4) step loop; tol doubles as absolute and relative control.
template <typename Rhs>
void integrate(const Rhs& f, double z0, double z1, double y[2], double tol) {
    if (!(tol > 0.0)) {
        throw std::domain_error("integration tolerance must be positive");
    }
    if (z0 == z1) {
        return;
    }
    const double dir = (z1 > z0) ? 1.0 : -1.0;
    const double span = std::fabs(z1 - z0);
    double z = z0;
    double h = dir * span / 64.0;
    double k1[2], k2[2], k3[2], k4[2], k5[2], k6[2], k7[2];
    double yt[2], y5[2];

    f(z, y, k1);
    for (long step = 0; step < 100000000L; ++step) {
        bool last = false;
        if (dir * (z + h - z1) >= 0.0) {
            h = z1 - z;
            last = true;
        }
        // Stall detection: below this step size the controller is grinding
        // against roundoff (the span would need > 1e12 steps).
        const double hmin = std::max(
            span * 1e-12, 64.0 * std::numeric_limits<double>::epsilon() *
                              std::max(std::fabs(z), std::fabs(z1)));
        if (!last && std::fabs(h) < hmin) {
            throw convergence_error(
                "step size underflow at z = " + std::to_string(z) +
                " (h = " + std::to_string(h) + "): tolerance unattainable");
        }

        yt[0] = y[0] + h * kA21 * k1[0];
        yt[1] = y[1] + h * kA21 * k1[1];
        f(z + kC[1] * h, yt, k2);
        yt[0] = y[0] + h * (kA31 * k1[0] + kA32 * k2[0]);
        yt[1] = y[1] + h * (kA31 * k1[1] + kA32 * k2[1]);
        f(z + kC[2] * h, yt, k3);
        yt[0] = y[0] + h * (kA41 * k1[0] + kA42 * k2[0] + kA43 * k3[0]);
        yt[1] = y[1] + h * (kA41 * k1[1] + kA42 * k2[1] + kA43 * k3[1]);
        f(z + kC[3] * h, yt, k4);
        yt[0] = y[0] + h * (kA51 * k1[0] + kA52 * k2[0] + kA53 * k3[0] +
                            kA54 * k4[0]);
        yt[1] = y[1] + h * (kA51 * k1[1] + kA52 * k2[1] + kA53 * k3[1] +
                            kA54 * k4[1]);
        f(z + kC[4] * h, yt, k5);
        yt[0] = y[0] + h * (kA61 * k1[0] + kA62 * k2[0] + kA63 * k3[0] +
                            kA64 * k4[0] + kA65 * k5[0]);
        yt[1] = y[1] + h * (kA61 * k1[1] + kA62 * k2[1] + kA63 * k3[1] +
                            kA64 * k4[1] + kA65 * k5[1]);
        f(z + h, yt, k6);
        y5[0] = y[0] + h * (kB1 * k1[0] + kB3 * k3[0] + kB4 * k4[0] +
                            kB5 * k5[0] + kB6 * k6[0]);
        y5[1] = y[1] + h * (kB1 * k1[1] + kB3 * k3[1] + kB4 * k4[1] +
                            kB5 * k5[1] + kB6 * k6[1]);
        f(z + h, y5, k7);

        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double e = h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] +
                                  kE5 * k5[i] + kE6 * k6[i] + kE7 * k7[i]);
            const double sc =
                tol + tol * std::max(std::fabs(y[i]), std::fabs(y5[i]));
            const double q = e / sc;
            err += q * q;
        }
        err = std::sqrt(0.5 * err);

        if (err <= 1.0) {
            z += h;
            y[0] = y5[0];
            y[1] = y5[1];
            k1[0] = k7[0];  // first-same-as-last
            k1[1] = k7[1];
            if (last || dir * (z1 - z) <= 0.0) {
                return;
            }
        }
        const double fac =
            (err == 0.0)
                ? 5.0
                : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= fac;
    }
    throw convergence_error("integration exceeded the step budget");
}

double quarter_period() {
    return closedform::period_t() / 4.0;
}

specfun::EllipticModulus lame_modulus() {
    return specfun::EllipticModulus(specfun::inv_sqrt2);
}

void require_kappa(double kappa) {
    if (!std::isfinite(kappa) || kappa < 0.0) {
        throw std::domain_error("kappa must be finite and >= 0");
    }
}

}  // namespace

State integrate_lame(double kappa, double z0, double z1, State s, double tol) {
    if (!std::isfinite(kappa) || !std::isfinite(z0) || !std::isfinite(z1) ||
        !std::isfinite(s.x) || !std::isfinite(s.xp)) {
        throw std::domain_error("integrate_lame: inputs must be finite");
    }
    const LameRhs rhs{kappa * kappa, lame_modulus()};
    double y[2] = {s.x, s.xp};
    integrate(rhs, z0, z1, y, tol);
    return {y[0], y[1], z1};
}

MonodromyMatrix monodromy(double kappa, double tol) {
    require_kappa(kappa);
    if (!(tol > 0.0)) {
        throw std::domain_error("integration tolerance must be positive");
    }
    // The local controller tolerance is tightened so the accumulated global
    // error keeps det within 10*tol over the whole period.
    const double local = tol / 64.0;
    const double t = closedform::period_t();
    const State c0 = integrate_lame(kappa, 0.0, t, {1.0, 0.0, 0.0}, local);
    const State c1 = integrate_lame(kappa, 0.0, t, {0.0, 1.0, 0.0}, local);
    return {c0.x, c1.x, c0.xp, c1.xp};
}

closedform::FloquetResult numeric_exponents(double kappa, double tol) {
    const MonodromyMatrix m = monodromy(kappa, tol);
    const double t = closedform::period_t();
    const double tr = m.m11 + m.m22;

    closedform::FloquetResult r;
    if (std::fabs(std::fabs(tr) - 2.0) <= 1e-9) {
        // Defective band-edge case: repeated multiplier tr/2.
        const double half = 0.5 * tr;
        r.rho1 = r.rho2 = half;
        r.mu1 = r.mu2 = {std::log(std::fabs(half)) / t, 0.0};
    } else {
        const double disc = tr * tr - 4.0;
        std::complex<double> root = (disc >= 0.0)
                                        ? std::complex<double>(std::sqrt(disc), 0.0)
                                        : std::complex<double>(0.0, std::sqrt(-disc));
        r.rho1 = 0.5 * (tr + root);
        r.rho2 = 0.5 * (tr - root);
        r.mu1 = std::log(r.rho1) / t;
        r.mu2 = std::log(r.rho2) / t;
    }
    r.lambda1 = std::sqrt(r.rho1);  // half-period eigenvalues up to sign
    r.lambda2 = std::sqrt(r.rho2);
    r.mu_tilde = std::max({r.mu1.real(), r.mu2.real(), 0.0});
    return r;
}

closedform::TransferMatrix halfperiod_transfer_numeric(double kappa,
                                                       double tol) {
    require_kappa(kappa);
    const double k = quarter_period();
    // Branch start z = K has y = cn^4 rising, so X = c1, dX/dz = +c2/sqrt2;
    // the same convention reads the new coefficients off at z = 3K.
    const State img1 =
        integrate_lame(kappa, k, 3.0 * k, {1.0, 0.0, k}, tol);
    const State img2 =
        integrate_lame(kappa, k, 3.0 * k, {0.0, specfun::inv_sqrt2, k}, tol);
    return {img1.x, img2.x, kSqrt2 * img1.xp, kSqrt2 * img2.xp};
}

double reconstruct_solution(double kappa, double c1, double c2, double z) {
    require_kappa(kappa);
    const double k = quarter_period();
    if (!(z >= k - 1e-9 && z <= 2.0 * k + 1e-9)) {
        throw std::domain_error(
            "reconstruct_solution: z outside the monotonic branch [K, 2K]");
    }
    const closedform::HypergeometricParams p =
        closedform::reduce_to_hypergeometric(kappa);
    const specfun::JacobiTriple j = specfun::jacobi_elliptic(z, lame_modulus());
    const double cn2 = j.cn * j.cn;
    double y = cn2 * cn2;
    y = std::clamp(y, 0.0, 1.0);

    if (y <= 0.5) {
        const double phi1 = specfun::hyp2f1(p.alpha, p.beta, p.gamma_p, y);
        const double phi2 =
            std::pow(y, 0.25) *
            specfun::hyp2f1(p.alpha + 0.25, p.beta + 0.25, 1.25, y);
        return c1 * phi1 + c2 * phi2;
    }
    const closedform::ConnectionCoefficients cc =
        closedform::connection_coefficients(p);
    const double w = 1.0 - y;
    const double phi3 = specfun::hyp2f1(p.alpha, p.beta, 0.5, w);
    const double phi4 =
        std::sqrt(w) * specfun::hyp2f1(p.gamma_p - p.alpha, p.gamma_p - p.beta,
                                       1.5, w);
    return (c1 * cc.A + c2 * cc.C) * phi3 + (c1 * cc.B + c2 * cc.D) * phi4;
}

}  // namespace lamecn::oracle
