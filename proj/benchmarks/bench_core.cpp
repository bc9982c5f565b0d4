#include "pfaff/catalog.hpp"
#include "pfaff/integral.hpp"
#include "pfaff/linalg.hpp"
#include "pfaff/reduction.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace pfaff;

namespace {

PfaffianSystem catalog_system(const char* entry) {
    const auto& e = catalog_entry(entry);
    return e.document().system(*e.options.system);
}

RationalMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    RationalMatrix m(n, n + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= n; ++j) m(i, j) = Rational(num(gen), den(gen));
    return m;
}

void BM_RationalNullspace(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_RationalNullspace)->Arg(4)->Arg(8)->Arg(16);

void BM_Wedge(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    DifferentialForm a(n, 1), b(n, 2);
    for (std::uint32_t i = 0; i < n; ++i) {
        a.add({i}, Polynomial::variable(n, i));
        b.add({i, (i + 1) % static_cast<std::uint32_t>(n)}, Polynomial::variable(n, (i + 2) % n));
    }
    for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_Wedge)->Arg(4)->Arg(8);

void BM_DerivedFlag(benchmark::State& state) {
    const char* names[] = {"example-A", "example-C", "goursat-3"};
    const auto sys = catalog_system(names[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(derived_flag(sys));
    state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_DerivedFlag)->DenseRange(0, 2);

void BM_MaxIntegralSearch(benchmark::State& state) {
    const char* names[] = {"example-B", "example-C", "darboux-h2"};
    const auto sys = catalog_system(names[state.range(0)]);
    const PointFrame frame(sys, Point(sys.nvars(), Rational(0)));
    for (auto _ : state) benchmark::DoNotOptimize(max_integral_dimension(frame));
    state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_MaxIntegralSearch)->DenseRange(0, 2);

void BM_CatalogAnalysis(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_all());
}
BENCHMARK(BM_CatalogAnalysis)->Unit(benchmark::kMillisecond);

void BM_TraceExampleA(benchmark::State& state) {
    const auto sys = catalog_system("example-A");
    for (auto _ : state) {
        benchmark::DoNotOptimize(trace_integral_curve(sys, Point(5, Rational(0)), std::size_t{0}, 1e-3, 1000));
    }
}
BENCHMARK(BM_TraceExampleA)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
