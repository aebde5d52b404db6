#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "lamecn/closedform.hpp"
#include "lamecn/specfun.hpp"
#include "oracles.hpp"

namespace cf = lamecn::closedform;
namespace sf = lamecn::specfun;

namespace {
// Peak growth rate (2 sqrt(pi)/Gamma^2(1/4)) ln(1+sqrt2); the paper rounds it
// to 0.2377.
constexpr double kMuPeak = 0.2376855683888614789;
constexpr double kPeriod = 7.4162987092054876737;
}  // namespace

TEST_CASE("period: value and Gamma identity") {
    CHECK(std::fabs(cf::period_t() - kPeriod) < 1e-12);
    CHECK(cf::period_t() / 4.0 ==
          sf::complete_elliptic_k(sf::EllipticModulus(sf::inv_sqrt2)));
    const double g14 = sf::gamma(0.25);
    CHECK(std::fabs(cf::period_t() * std::sqrt(sf::pi) / (g14 * g14) - 1.0) <
          1e-12);
}

TEST_CASE("reduction: parameter arithmetic") {
    const cf::HypergeometricParams p0 = cf::reduce_to_hypergeometric(0.0);
    CHECK(p0.alpha == 0.25);
    CHECK(p0.beta == 0.0);
    CHECK(p0.gamma_p == 0.75);
    CHECK(p0.diff == 0.25);
    CHECK(p0.delta == 0.25);

    const cf::HypergeometricParams p1 = cf::reduce_to_hypergeometric(1.0);
    CHECK(p1.alpha == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p1.beta == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(p1.diff == doctest::Approx(0.75).epsilon(1e-15));

    // peak of band 1: Delta = 1
    const cf::HypergeometricParams pp =
        cf::reduce_to_hypergeometric(std::sqrt(2.0 - 0.125));
    CHECK(pp.diff == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(cf::reduce_to_hypergeometric(-1.0), std::domain_error);
    CHECK_THROWS_AS(cf::reduce_to_hypergeometric(
                        std::numeric_limits<double>::infinity()),
                    std::domain_error);
}

TEST_CASE("reduction: alpha + beta stays exactly 1/4") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dk(0.0, 50.0);
    for (int i = 0; i < 2000; ++i) {
        const cf::HypergeometricParams p = cf::reduce_to_hypergeometric(dk(rng));
        CHECK(p.alpha + p.beta == 0.25);
        CHECK(std::fabs(p.diff - std::sqrt(1.0 + 8.0 * p.kappa * p.kappa) / 4.0) <=
              1e-14 * p.diff);
        CHECK(p.diff >= 0.25);
    }
}

TEST_CASE("connection coefficients: kappa = 0 degeneracies") {
    const cf::ConnectionCoefficients cc =
        cf::connection_coefficients(cf::reduce_to_hypergeometric(0.0));
    CHECK(cc.A == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(cc.B == 0.0);  // Gamma(beta) = Gamma(0) pole in the denominator
}

TEST_CASE("connection coefficients: kappa = 1 against Gamma ratios") {
    const cf::ConnectionCoefficients cc =
        cf::connection_coefficients(cf::reduce_to_hypergeometric(1.0));
    const double want =
        sf::gamma(0.75) * sf::gamma(0.5) / (sf::gamma(0.25) * sf::gamma(1.0));
    CHECK(cc.A == doctest::Approx(want).epsilon(1e-13));
    // D has Gamma(beta+1-gamma) = Gamma(0) in its denominator here
    CHECK(cc.D == 0.0);
}

TEST_CASE("connection coefficients: match a numerical basis fit") {
    // Fit phi1(y) = A phi3(y) + B phi4(y) at two points using nothing but
    // brute-force series, then compare with the Gamma-product coefficients.
    const cf::HypergeometricParams p = cf::reduce_to_hypergeometric(1.7);
    const cf::ConnectionCoefficients cc = cf::connection_coefficients(p);
    const long double a = p.alpha, b = p.beta;
    auto phi1 = [&](long double y) {
        return testoracle::hyp2f1_series_brute(a, b, 0.75L, y, 4000);
    };
    auto phi3 = [&](long double y) {
        return testoracle::hyp2f1_series_brute(a, b, 0.5L, 1.0L - y, 400);
    };
    auto phi4 = [&](long double y) {
        return std::sqrt(1.0L - y) *
               testoracle::hyp2f1_series_brute(0.75L - a, 0.75L - b, 1.5L,
                                               1.0L - y, 400);
    };
    const long double y1 = 0.62L, y2 = 0.86L;
    const long double det = phi3(y1) * phi4(y2) - phi3(y2) * phi4(y1);
    const double a_fit =
        static_cast<double>((phi1(y1) * phi4(y2) - phi1(y2) * phi4(y1)) / det);
    const double b_fit =
        static_cast<double>((phi3(y1) * phi1(y2) - phi3(y2) * phi1(y1)) / det);
    CHECK(cc.A == doctest::Approx(a_fit).epsilon(1e-9));
    CHECK(cc.B == doctest::Approx(b_fit).epsilon(1e-9));
}

TEST_CASE("transfer matrix: diagonal and determinant") {
    const cf::TransferMatrix t0 = cf::transfer_matrix(cf::reduce_to_hypergeometric(0.0));
    CHECK(t0.t11 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(t0.t11 == t0.t22);
    CHECK(t0.t21 == 0.0);

    const cf::TransferMatrix t1 = cf::transfer_matrix(cf::reduce_to_hypergeometric(1.0));
    CHECK(t1.t11 == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(t1.t12 == 0.0);
    CHECK(t1.t21 == doctest::Approx(-1.1981402347355922074).epsilon(1e-12));

    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> dk(0.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const cf::TransferMatrix t =
            cf::transfer_matrix(cf::reduce_to_hypergeometric(dk(rng)));
        CHECK(t.t11 == t.t22);
        worst = std::max(worst, std::fabs(t.t11 * t.t22 - t.t12 * t.t21 - 1.0));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("transfer matrix: eigenvalues reproduce the closed-form lambda") {
    for (double kappa = 0.0; kappa <= 10.0; kappa += 0.1) {
        const cf::TransferMatrix t =
            cf::transfer_matrix(cf::reduce_to_hypergeometric(kappa));
        const cf::FloquetResult r = cf::multipliers_exponents(kappa);
        const std::complex<double> tr2(0.5 * (t.t11 + t.t22), 0.0);
        const std::complex<double> root =
            std::sqrt(tr2 * tr2 - (t.t11 * t.t22 - t.t12 * t.t21));
        const std::complex<double> e1 = tr2 + root;
        const std::complex<double> e2 = tr2 - root;
        const double err = std::min(std::abs(e1 - r.lambda1), std::abs(e1 - r.lambda2)) +
                           std::min(std::abs(e2 - r.lambda1), std::abs(e2 - r.lambda2));
        CHECK_MESSAGE(err < 1e-9, "kappa = ", kappa);
    }
}

TEST_CASE("multipliers: anchor cases") {
    const cf::FloquetResult r0 = cf::multipliers_exponents(0.0);
    CHECK(std::abs(r0.lambda1 - 1.0) < 1e-12);
    CHECK(std::abs(r0.lambda2 - 1.0) < 1e-12);
    CHECK(std::abs(r0.rho1 - 1.0) < 1e-12);
    CHECK(std::abs(r0.mu1) < 1e-12);
    CHECK(r0.mu_tilde >= 0.0);
    CHECK(r0.mu_tilde < 1e-12);

    // Delta = 1/2: lambda = +-i, rho = -1, stable
    const double k_half = std::sqrt(3.0 / 8.0);
    const cf::FloquetResult rh = cf::multipliers_exponents(k_half);
    CHECK(std::abs(rh.lambda1 - std::complex<double>(0.0, 1.0)) < 1e-12);
    CHECK(std::abs(rh.lambda2 - std::complex<double>(0.0, -1.0)) < 1e-12);
    CHECK(std::abs(rh.rho1 + 1.0) < 1e-12);
    CHECK(std::abs(rh.rho2 + 1.0) < 1e-12);
    // kappa is sqrt(3/8) only to rounding, so mu_tilde is ~1e-33, not 0
    CHECK(rh.mu_tilde < 1e-30);

    // band-1 peak
    const cf::FloquetResult rp =
        cf::multipliers_exponents(std::sqrt(2.0 - 0.125));
    CHECK(std::fabs(rp.mu_tilde - kMuPeak) < 1e-12);
    CHECK(std::fabs(rp.mu_tilde - 0.2377) < 5e-5);  // the paper's rounding

    CHECK_THROWS_AS(cf::multipliers_exponents(-0.5), std::domain_error);
}

TEST_CASE("multipliers: algebraic invariants over random kappa") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> dk(0.0, 20.0);
    for (int i = 0; i < 1000; ++i) {
        const double kappa = dk(rng);
        const cf::FloquetResult r = cf::multipliers_exponents(kappa);
        CHECK(std::abs(r.rho1 * r.rho2 - 1.0) < 1e-10);
        const double ct = sf::cos_pi(cf::reduce_to_hypergeometric(kappa).diff);
        CHECK(std::abs(r.rho1 + r.rho2 - (8.0 * ct * ct - 2.0)) < 1e-10);
        CHECK(r.mu_tilde >= 0.0);
        CHECK(std::fabs(r.mu_tilde - std::max(r.mu1.real(), r.mu2.real())) <
              1e-14);
        if (r.mu_tilde == 0.0) {
            CHECK(std::fabs(std::abs(r.rho1) - 1.0) < 1e-10);
            CHECK(std::fabs(std::abs(r.rho2) - 1.0) < 1e-10);
        } else {
            // real exponents come in a +-mu pair inside bands
            CHECK(std::fabs(r.mu1.real() + r.mu2.real()) < 1e-10);
        }
    }
}

TEST_CASE("growth rate: values and band logic") {
    CHECK(cf::growth_rate(0.0) == 0.0);
    CHECK(cf::growth_rate(1.0) == 0.0);   // band edge
    CHECK(cf::growth_rate(2.0) == 0.0);   // gap between bands 1 and 2
    CHECK(std::fabs(cf::growth_rate(std::sqrt(2.0 - 0.125)) - kMuPeak) < 1e-12);
    // frozen from the closed expression evaluated in extended precision
    CHECK(std::fabs(cf::growth_rate(1.2) - 0.2110765870354311794) < 1e-13);
    CHECK(std::fabs(cf::growth_rate(1.5) - 0.2219976019014716609) < 1e-13);
    CHECK(std::fabs(cf::growth_rate(2.8) - 0.2376494632109681782) < 1e-13);
    CHECK(std::fabs(cf::growth_rate(4.0) - 0.1825939994218753656) < 1e-13);
    CHECK(std::fabs(cf::growth_rate(9.7) - 0.1994336731005041113) < 1e-13);
    CHECK_THROWS_AS(cf::growth_rate(-2.0), std::domain_error);
}

TEST_CASE("growth rate: agrees with multipliers_exponents") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> dk(0.0, 15.0);
    for (int i = 0; i < 2000; ++i) {
        const double kappa = dk(rng);
        CHECK(std::fabs(cf::growth_rate(kappa) -
                        cf::multipliers_exponents(kappa).mu_tilde) < 1e-12);
    }
}

TEST_CASE("growth rate: positive exactly inside the band inequalities") {
    for (int i = 0; i <= 10000; ++i) {
        const double kappa = 12.0 * i / 10000.0;
        const double diff = std::sqrt(1.0 + 8.0 * kappa * kappa) / 4.0;
        const double nearest = std::nearbyint(diff);
        const double dist = std::fabs(diff - nearest);
        if (dist > 0.25 - 1e-9 && dist < 0.25 + 1e-9) {
            continue;  // skip the edge neighbourhood
        }
        const bool inside = nearest >= 1.0 && dist < 0.25;
        CHECK(( cf::growth_rate(kappa) > 0.0) == inside);
    }
}

TEST_CASE("amplification bands: edges, peaks, universality") {
    const cf::AmplificationBand b1 = cf::amplification_band(1);
    CHECK(b1.kappa_lo == 1.0);
    CHECK(b1.kappa_hi == doctest::Approx(1.7320508075688773).epsilon(1e-15));
    CHECK(b1.kappa_peak == doctest::Approx(1.3693063937629153).epsilon(1e-15));
    CHECK(std::fabs(b1.mu_peak - kMuPeak) < 1e-12);

    const cf::AmplificationBand b2 = cf::amplification_band(2);
    CHECK(b2.kappa_lo == doctest::Approx(2.4494897427831781).epsilon(1e-15));
    CHECK(b2.kappa_hi == doctest::Approx(3.1622776601683795).epsilon(1e-15));
    CHECK(b2.kappa_peak == doctest::Approx(2.8062430400804560).epsilon(1e-15));

    const cf::AmplificationBand b3 = cf::amplification_band(3);
    CHECK(b3.kappa_lo == doctest::Approx(3.8729833462074169).epsilon(1e-15));
    CHECK(b3.kappa_hi == doctest::Approx(4.5825756949558400).epsilon(1e-15));
    CHECK(b3.kappa_peak == doctest::Approx(4.2278836313219407).epsilon(1e-15));

    // the peak value is the same bit pattern for every n
    for (int n = 2; n <= 7; ++n) {
        CHECK(cf::amplification_band(n).mu_peak == b1.mu_peak);
    }
    CHECK_THROWS_AS(cf::amplification_band(0), std::domain_error);
    CHECK_THROWS_AS(cf::amplification_band(-3), std::domain_error);
}

TEST_CASE("locate_bands: enumeration") {
    CHECK(cf::locate_bands(0.5).empty());
    const auto upto2 = cf::locate_bands(2.0);
    REQUIRE(upto2.size() == 1);
    CHECK(upto2.front().n == 1);
    const auto upto10 = cf::locate_bands(10.0);
    REQUIRE(upto10.size() == 7);
    for (std::size_t i = 0; i < upto10.size(); ++i) {
        CHECK(upto10[i].n == static_cast<int>(i) + 1);
        if (i > 0) {
            // non-overlapping, separated by stable gaps
            CHECK(upto10[i].kappa_lo > upto10[i - 1].kappa_hi);
        }
    }
    CHECK_THROWS_AS(cf::locate_bands(-1.0), std::domain_error);
}
