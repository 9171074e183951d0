// Compares the OpenMP scan kernels against the serial references.

#include <benchmark/benchmark.h>

#include "lemni/classes.hpp"
#include "lemni/geometry.hpp"
#include "lemni/scan.hpp"

namespace {

constexpr double kHalfPi = 1.5707963267948966;

void BM_grid_extreme_serial(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        auto e = lemni::scan::grid_extreme_serial(
            -kHalfPi, kHalfPi, n, lemni::scan::Mode::Min,
            [](double t) { return lemni::squared_distance(0.7, t); });
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_grid_extreme_serial)->Arg(10001)->Arg(1000001);

void BM_grid_extreme_omp(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        auto e = lemni::scan::grid_extreme(
            -kHalfPi, kHalfPi, n, lemni::scan::Mode::Min,
            [](double t) { return lemni::squared_distance(0.7, t); });
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_grid_extreme_omp)->Arg(10001)->Arg(1000001);

void BM_all_of_grid_serial(benchmark::State& state) {
    const long n = state.range(0);
    const double a = 1.0;
    const double rho = 0.999 * lemni::inner_radius(a);
    for (auto _ : state) {
        bool ok = lemni::scan::all_of_grid_serial(n, [&](long k) {
            const double th = 6.283185307179586 * k / static_cast<double>(n);
            return lemni::in_lemniscate({a + rho * std::cos(th), rho * std::sin(th)});
        });
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_all_of_grid_serial)->Arg(4096)->Arg(1 << 20);

void BM_all_of_grid_omp(benchmark::State& state) {
    const long n = state.range(0);
    const double a = 1.0;
    const double rho = 0.999 * lemni::inner_radius(a);
    for (auto _ : state) {
        bool ok = lemni::scan::all_of_grid(n, [&](long k) {
            const double th = 6.283185307179586 * k / static_cast<double>(n);
            return lemni::in_lemniscate({a + rho * std::cos(th), rho * std::sin(th)});
        });
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_all_of_grid_omp)->Arg(4096)->Arg(1 << 20);

}  // namespace

BENCHMARK_MAIN();
