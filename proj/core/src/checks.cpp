#include "lamecn/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "lamecn/closedform.hpp"
#include "lamecn/floquet_oracle.hpp"
#include "lamecn/specfun.hpp"

namespace lamecn::checks {

namespace {

namespace sf = lamecn::specfun;
namespace cf = lamecn::closedform;
namespace orc = lamecn::oracle;

constexpr double kSqrtPi = 1.77245385090551602729816748334114518;

// Each check reports its worst discrepancy; exceptions become failures so a
// verify run always produces a full report.
CheckResult run_one(const std::string& name, double limit,
                    const std::function<double(std::string&)>& body) {
    CheckResult r{name, false, 0.0, limit, ""};
    try {
        r.measured = body(r.detail);
        r.passed = r.measured <= limit;
    } catch (const std::exception& e) {
        r.passed = false;
        r.measured = std::numeric_limits<double>::infinity();
        r.detail = e.what();
    }
    return r;
}

bool in_band_strict(double kappa, double margin) {
    const double diff = std::sqrt(1.0 + 8.0 * kappa * kappa) / 4.0;
    const double nearest = std::nearbyint(diff);
    return nearest >= 1.0 && std::fabs(diff - nearest) < 0.25 - margin;
}

}  // namespace

std::vector<CheckResult> run_all(double tol) {
    if (!(tol > 0.0)) {
        throw std::domain_error("verification tolerance must be positive");
    }
    std::vector<CheckResult> out;

    out.push_back(run_one("period_identity", 1e-12, [](std::string&) {
        const double t = cf::period_t();
        const double g = sf::gamma(0.25);
        return std::fabs(t * kSqrtPi / (g * g) - 1.0);
    }));

    out.push_back(run_one("elliptic_k_spot", 1e-10, [](std::string&) {
        return std::fabs(
            sf::complete_elliptic_k(sf::EllipticModulus(sf::inv_sqrt2)) -
            1.8540746773013719184);
    }));

    out.push_back(run_one("gamma_spot", 1e-13, [](std::string&) {
        return std::fabs(sf::gamma(0.5) / kSqrtPi - 1.0);
    }));

    out.push_back(run_one("hyp2f1_spot", 1e-11, [](std::string&) {
        const double two_ln2 = 2.0 * std::log(2.0);
        return std::fabs(sf::hyp2f1(1.0, 1.0, 2.0, 0.5) / two_ln2 - 1.0);
    }));

    out.push_back(run_one("gamma_recurrence", 1e-12, [](std::string&) {
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> dist(0.5, 50.0);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const double x = dist(rng);
            const double lhs = sf::gamma(x + 1.0) / sf::gamma(x);
            worst = std::max(worst, std::fabs(lhs / x - 1.0));
        }
        return worst;
    }));

    out.push_back(run_one("gamma_reflection", 1e-11, [](std::string&) {
        std::mt19937_64 rng(2025);
        std::uniform_real_distribution<double> dist(1e-6, 1.0 - 1e-6);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double x = dist(rng);
            const double lhs =
                sf::gamma(x) * sf::gamma(1.0 - x) * sf::sin_pi(x);
            worst = std::max(worst, std::fabs(lhs / sf::pi - 1.0));
        }
        return worst;
    }));

    out.push_back(run_one("jacobi_identities", 1e-11, [](std::string&) {
        std::mt19937_64 rng(2026);
        std::uniform_real_distribution<double> du(-25.0, 25.0);
        std::uniform_real_distribution<double> dk(0.0, 0.999);
        double worst = 0.0;
        for (int i = 0; i < 2000; ++i) {
            const double u = du(rng);
            const sf::EllipticModulus m(dk(rng));
            const sf::JacobiTriple j = sf::jacobi_elliptic(u, m);
            worst = std::max(worst, std::fabs(j.sn * j.sn + j.cn * j.cn - 1.0));
            worst = std::max(
                worst,
                std::fabs(j.dn * j.dn + m.k() * m.k() * j.sn * j.sn - 1.0));
            const double twok = 2.0 * sf::complete_elliptic_k(m);
            const sf::JacobiTriple js = sf::jacobi_elliptic(u + twok, m);
            worst = std::max(worst, std::fabs(js.cn + j.cn));
        }
        return worst;
    }));

    out.push_back(run_one("jacobi_derivative", 1e-7, [](std::string&) {
        const sf::EllipticModulus m(sf::inv_sqrt2);
        const double h = 1e-6;
        double worst = 0.0;
        for (double u = -3.0; u <= 3.0; u += 0.37) {
            const sf::JacobiTriple j = sf::jacobi_elliptic(u, m);
            const double fd = (sf::jacobi_elliptic(u + h, m).cn -
                               sf::jacobi_elliptic(u - h, m).cn) /
                              (2.0 * h);
            worst = std::max(worst, std::fabs(fd + j.sn * j.dn));
        }
        return worst;
    }));

    out.push_back(run_one("hyp2f1_connection_overlap", 1e-10, [](std::string&) {
        // Both evaluation routes on the overlap window, for the parameter
        // families the reconstruction actually uses.
        double worst = 0.0;
        for (double kappa : {0.3, 0.9, 1.7, 3.1}) {
            const cf::HypergeometricParams p =
                cf::reduce_to_hypergeometric(kappa);
            for (double y = 0.4; y <= 0.6; y += 0.02) {
                const double direct = [&] {
                    // direct series stays valid past 1/2 for these y
                    double term = 1.0, sum = 1.0;
                    for (int n = 0; n < 4000; ++n) {
                        term *= (p.alpha + n) * (p.beta + n) /
                                ((p.gamma_p + n) * (n + 1.0)) * y;
                        sum += term;
                        if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
                    }
                    return sum;
                }();
                const double routed =
                    sf::hyp2f1(p.alpha, p.beta, p.gamma_p, y);
                worst = std::max(worst, std::fabs(routed - direct));
            }
        }
        return worst;
    }));

    out.push_back(run_one("multiplier_product_sum", 1e-10, [](std::string&) {
        std::mt19937_64 rng(2027);
        std::uniform_real_distribution<double> dk(0.0, 20.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double kappa = dk(rng);
            const cf::FloquetResult r = cf::multipliers_exponents(kappa);
            const double ct = sf::cos_pi(std::sqrt(1.0 + 8.0 * kappa * kappa) / 4.0);
            worst = std::max(worst, std::abs(r.rho1 * r.rho2 - 1.0));
            worst = std::max(
                worst, std::abs(r.rho1 + r.rho2 - (8.0 * ct * ct - 2.0)));
        }
        return worst;
    }));

    out.push_back(run_one("band_positivity_grid", 0.0, [](std::string& detail) {
        int mismatches = 0;
        for (int i = 0; i <= 10000; ++i) {
            const double kappa = 12.0 * i / 10000.0;
            const bool positive = cf::growth_rate(kappa) > 0.0;
            if (positive != in_band_strict(kappa, 1e-9)) {
                ++mismatches;
            }
        }
        if (mismatches > 0) detail = "sign/band mismatches on grid";
        return static_cast<double>(mismatches);
    }));

    out.push_back(run_one("transfer_eigenvalues", 1e-9, [](std::string&) {
        double worst = 0.0;
        for (double kappa = 0.0; kappa <= 10.0; kappa += 0.05) {
            const cf::HypergeometricParams p =
                cf::reduce_to_hypergeometric(kappa);
            const cf::TransferMatrix t = cf::transfer_matrix(p);
            const cf::FloquetResult r = cf::multipliers_exponents(kappa);
            // quadratic formula on the entries
            const std::complex<double> half_tr(0.5 * (t.t11 + t.t22), 0.0);
            const std::complex<double> disc =
                half_tr * half_tr - (t.t11 * t.t22 - t.t12 * t.t21);
            const std::complex<double> root = std::sqrt(disc);
            const std::complex<double> e1 = half_tr + root;
            const std::complex<double> e2 = half_tr - root;
            const double d1 = std::min(std::abs(e1 - r.lambda1),
                                       std::abs(e1 - r.lambda2));
            const double d2 = std::min(std::abs(e2 - r.lambda1),
                                       std::abs(e2 - r.lambda2));
            worst = std::max({worst, d1, d2});
        }
        return worst;
    }));

    out.push_back(run_one("transfer_determinant", 1e-10, [](std::string&) {
        std::mt19937_64 rng(2028);
        std::uniform_real_distribution<double> dk(0.0, 10.0);
        double worst = 0.0;
        for (int i = 0; i < 400; ++i) {
            const cf::TransferMatrix t = cf::transfer_matrix(
                cf::reduce_to_hypergeometric(dk(rng)));
            worst = std::max(worst,
                             std::fabs(t.t11 * t.t22 - t.t12 * t.t21 - 1.0));
        }
        return worst;
    }));

    out.push_back(run_one("peak_universality", 0.0, [](std::string& detail) {
        const double first = cf::amplification_band(1).mu_peak;
        for (int n = 2; n <= 5; ++n) {
            if (cf::amplification_band(n).mu_peak != first) {
                detail = "peak value differs between bands";
                return 1.0;
            }
        }
        return 0.0;
    }));

    const double mu_limit = std::max(1e-7, 100.0 * tol);
    out.push_back(run_one("oracle_growth_agreement", mu_limit,
                          [tol](std::string&) {
        double worst = 0.0;
        for (double kappa = 0.0; kappa <= 10.0; kappa += 0.25) {
            const double closed = cf::growth_rate(kappa);
            const double numeric = orc::numeric_exponents(kappa, tol).mu_tilde;
            worst = std::max(worst, std::fabs(closed - numeric));
        }
        return worst;
    }));

    const double det_limit = std::max(1e-9, 10.0 * tol);
    out.push_back(run_one("oracle_wronskian", det_limit, [tol](std::string&) {
        double worst = 0.0;
        for (double kappa = 0.0; kappa <= 10.0; kappa += 0.5) {
            const orc::MonodromyMatrix m = orc::monodromy(kappa, tol);
            worst = std::max(
                worst, std::fabs(m.m11 * m.m22 - m.m12 * m.m21 - 1.0));
        }
        return worst;
    }));

    out.push_back(run_one("halfperiod_transfer_match", mu_limit,
                          [tol](std::string&) {
        double worst = 0.0;
        for (double kappa : {0.0, 0.7, 1.0, 1.3693063937629153, 2.2, 4.6}) {
            const cf::TransferMatrix closed =
                cf::transfer_matrix(cf::reduce_to_hypergeometric(kappa));
            const cf::TransferMatrix numeric =
                orc::halfperiod_transfer_numeric(kappa, tol);
            worst = std::max({worst, std::fabs(closed.t11 - numeric.t11),
                              std::fabs(closed.t12 - numeric.t12),
                              std::fabs(closed.t21 - numeric.t21),
                              std::fabs(closed.t22 - numeric.t22)});
        }
        return worst;
    }));

    out.push_back(run_one("gap_multiplier_unitarity",
                          std::max(1e-8, 100.0 * tol), [tol](std::string&) {
        std::mt19937_64 rng(2029);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 60; ++i) {
            double kappa;
            do {
                kappa = 10.0 * uni(rng);
            } while (in_band_strict(kappa, -1e-3));  // keep clear of edges
            const cf::FloquetResult r = orc::numeric_exponents(kappa, tol);
            worst = std::max({worst, std::fabs(std::abs(r.rho1) - 1.0),
                              std::fabs(std::abs(r.rho2) - 1.0)});
        }
        return worst;
    }));

    out.push_back(run_one("reconstruction_consistency",
                          std::max(1e-8, 100.0 * tol), [tol](std::string&) {
        std::mt19937_64 rng(2030);
        std::uniform_real_distribution<double> dk(0.0, 5.0);
        std::uniform_real_distribution<double> dc(-2.0, 2.0);
        std::uniform_real_distribution<double> dz(0.05, 0.95);
        const double k = cf::period_t() / 4.0;
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double kappa = dk(rng);
            const double c1 = dc(rng);
            const double c2 = dc(rng);
            const double z = k + dz(rng) * k;
            const orc::State s = orc::integrate_lame(
                kappa, k, z, {c1, c2 * sf::inv_sqrt2, k}, tol);
            const double rec = orc::reconstruct_solution(kappa, c1, c2, z);
            worst = std::max(worst, std::fabs(s.x - rec));
        }
        return worst;
    }));

    return out;
}

}  // namespace lamecn::checks
