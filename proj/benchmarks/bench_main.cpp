#include <benchmark/benchmark.h>

#include <random>

#include "qsphere/path_integral.hpp"

using namespace qsphere;

namespace {

Symbol random_symbol(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return Symbol{cplx{u(rng), u(rng)},
                  {cplx{u(rng), u(rng)}, cplx{u(rng), u(rng)},
                   cplx{u(rng), u(rng)}}};
}

void BM_StarProduct(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const Symbol a = random_symbol(rng), b = random_symbol(rng);
    for (auto _ : state) benchmark::DoNotOptimize(star(a, b));
}
BENCHMARK(BM_StarProduct);

void BM_StarExponentialClosed(benchmark::State& state) {
    const Symbol wh{cplx{0.3}, {cplx{0.4}, cplx{-0.1}, cplx{0.7}}};
    for (auto _ : state)
        benchmark::DoNotOptimize(star_exponential_closed(wh, 1.3));
}
BENCHMARK(BM_StarExponentialClosed);

void BM_StarExponentialSeries(benchmark::State& state) {
    const Symbol wh{cplx{0.3}, {cplx{0.4}, cplx{-0.1}, cplx{0.7}}};
    for (auto _ : state)
        benchmark::DoNotOptimize(star_exponential_series(wh, 1.3));
}
BENCHMARK(BM_StarExponentialSeries);

void BM_PropagatorQuadrature(benchmark::State& state) {
    const QuadratureRule rule = gauss_legendre_sphere(
        static_cast<int>(state.range(0)), 2 * static_cast<int>(state.range(0)));
    const Matrix2 H = rabi_hamiltonian(RabiConfig{});
    const TransitionPair pair{spin_up_z(), spin_down_z()};
    for (auto _ : state)
        benchmark::DoNotOptimize(propagator_quadrature(pair, H, 1.0, 1.0, rule));
}
BENCHMARK(BM_PropagatorQuadrature)->Arg(4)->Arg(8)->Arg(16);

void BM_SlicedPropagator(benchmark::State& state) {
    SlicingConfig cfg;
    cfg.rule = gauss_legendre_sphere(8, 16);
    cfg.ordering = Ordering::symmetric;
    cfg.n_slices = static_cast<int>(state.range(0));
    const Matrix2 H = rabi_hamiltonian(RabiConfig{});
    const TransitionPair pair{spin_up_z(), spin_down_z()};
    for (auto _ : state)
        benchmark::DoNotOptimize(sliced_propagator(pair, H, 2.0, 1.0, cfg));
}
BENCHMARK(BM_SlicedPropagator)->Arg(8)->Arg(32)->Arg(128);

void BM_CheckAxioms(benchmark::State& state) {
    const QuadratureRule rule = gauss_legendre_sphere(8, 16);
    for (auto _ : state) benchmark::DoNotOptimize(check_axioms(10, rule, 1));
}
BENCHMARK(BM_CheckAxioms);

}  // namespace

BENCHMARK_MAIN();
