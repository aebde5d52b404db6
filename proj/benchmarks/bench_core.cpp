#include <benchmark/benchmark.h>

#include "lamecn/closedform.hpp"
#include "lamecn/floquet_oracle.hpp"
#include "lamecn/specfun.hpp"

namespace cf = lamecn::closedform;
namespace orc = lamecn::oracle;
namespace sf = lamecn::specfun;

static void BM_Gamma(benchmark::State& state) {
    double x = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::gamma(x));
        x += 0.17;
        if (x > 150.0) x -= 149.3;
    }
}
BENCHMARK(BM_Gamma);

static void BM_JacobiElliptic(benchmark::State& state) {
    const sf::EllipticModulus m(sf::inv_sqrt2);
    double u = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::jacobi_elliptic(u, m));
        u += 0.31;
    }
}
BENCHMARK(BM_JacobiElliptic);

static void BM_Hyp2f1Series(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::hyp2f1(0.5, -0.25, 0.75, 0.45));
    }
}
BENCHMARK(BM_Hyp2f1Series);

static void BM_Hyp2f1Connection(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::hyp2f1(0.5, -0.25, 0.75, 0.85));
    }
}
BENCHMARK(BM_Hyp2f1Connection);

static void BM_GrowthRate(benchmark::State& state) {
    double kappa = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cf::growth_rate(kappa));
        kappa += 0.013;
        if (kappa > 10.0) kappa = 0.0;
    }
}
BENCHMARK(BM_GrowthRate);

static void BM_TransferMatrix(benchmark::State& state) {
    double kappa = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            cf::transfer_matrix(cf::reduce_to_hypergeometric(kappa)));
        kappa += 0.013;
        if (kappa > 10.0) kappa = 0.0;
    }
}
BENCHMARK(BM_TransferMatrix);

static void BM_Monodromy(benchmark::State& state) {
    const double tol = 1e-10;
    for (auto _ : state) {
        benchmark::DoNotOptimize(orc::monodromy(1.2, tol));
    }
}
BENCHMARK(BM_Monodromy)->Unit(benchmark::kMillisecond);

static void BM_Reconstruct(benchmark::State& state) {
    const double z = cf::period_t() / 4.0 + 0.9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(orc::reconstruct_solution(1.3, 1.0, 0.4, z));
    }
}
BENCHMARK(BM_Reconstruct);

BENCHMARK_MAIN();
