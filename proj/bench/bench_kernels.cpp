// Serial vs OpenMP comparison for the hot kernels. Both paths produce
// bitwise-identical results (deterministic blocked reductions), so the only
// difference measured here is scheduling.

#include <benchmark/benchmark.h>

#include <memory>

#include "mcs/charcore.hpp"
#include "mcs/maxsearch.hpp"
#include "mcs/prescribe.hpp"
#include "mcs/sums.hpp"
#include "mcs/weil.hpp"

using namespace mcs;

namespace {

std::shared_ptr<const PrimeModulus> mod(std::int64_t p) {
    return std::make_shared<const PrimeModulus>(static_cast<std::uint64_t>(p));
}

Exec exec_of(const benchmark::State& state) {
    return state.range(1) ? Exec::parallel : Exec::serial;
}

void BM_direct_sum(benchmark::State& state) {
    auto m = mod(state.range(0));
    SumSpec s(legendre_character(m), 0.0, 1.0);
    const Exec e = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(direct_sum(s, 0.123, e));
}

void BM_residual_profile(benchmark::State& state) {
    auto m = mod(state.range(0));
    SumSpec s(legendre_character(m), 0.0, 1.0);
    const Exec e = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(residual_profile(s, 0.25, 4, e));
}

void BM_certified_max(benchmark::State& state) {
    auto m = mod(state.range(0));
    SumSpec s(legendre_character(m), 0.0, 1.0);
    const Exec e = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(certified_max(s, 1.0 / 16, e));
}

void BM_poly_char_sum(benchmark::State& state) {
    auto m = mod(state.range(0));
    auto leg = legendre_character(m);
    FactoredPoly P{{{0, 1}, {1, 1}, {5, 1}}};
    const Exec e = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(poly_char_sum(leg, P, e));
}

void BM_build_S(benchmark::State& state) {
    auto m = mod(state.range(0));
    auto leg = legendre_character(m);
    PrescriptionTarget t;
    t.K0 = 2;
    t.d = 2;
    t.xi_exp = {0, 0, 0, 0, 0};
    const Exec e = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(build_S(leg, t, e));
}

void serial_vs_parallel(benchmark::internal::Benchmark* b) {
    for (std::int64_t p : {4999, 40009})
        for (std::int64_t par : {0, 1}) b->Args({p, par});
}

BENCHMARK(BM_direct_sum)->Apply(serial_vs_parallel);
BENCHMARK(BM_residual_profile)->Apply(serial_vs_parallel);
BENCHMARK(BM_certified_max)->Apply(serial_vs_parallel);
BENCHMARK(BM_poly_char_sum)->Apply(serial_vs_parallel);
BENCHMARK(BM_build_S)->Apply(serial_vs_parallel);

}  // namespace

BENCHMARK_MAIN();
