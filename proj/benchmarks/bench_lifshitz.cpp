#include "casimir/lifshitz.hpp"
#include "casimir/quadrature.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace casimir;

namespace
{

void zero_temperature_plasma(benchmark::State& state)
{
    const PlateSystem sys(static_cast<double>(state.range(0)) * 1e-7, 1e-4, DielectricModel::plasma(1.37e16));
    for (auto _ : state) {
        benchmark::DoNotOptimize(casimir_force_zero_temperature(sys, {}).force);
    }
}
BENCHMARK(zero_temperature_plasma)->Arg(1)->Arg(10)->Arg(100);

void finite_temperature_plasma(benchmark::State& state)
{
    const PlateSystem sys(static_cast<double>(state.range(0)) * 1e-7, 1e-4, DielectricModel::plasma(1.37e16));
    MatsubaraConfig m;
    m.field_temperature = Temperature{300.0};
    std::uint64_t terms = 0;
    for (auto _ : state) {
        const auto r = casimir_force_finite_temperature(sys, m, {});
        terms = r.matsubara_terms;
        benchmark::DoNotOptimize(r.force);
    }
    state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(finite_temperature_plasma)->Arg(1)->Arg(10)->Arg(100);

void spectral_integral(benchmark::State& state)
{
    const auto fp = detail::frequency_point(DielectricModel::plasma(1.37e16), 1e15, 1e-6, nullptr);
    for (auto _ : state) {
        benchmark::DoNotOptimize(detail::spectral_integral(fp, 1e-10, 0.0, 2000).value);
    }
}
BENCHMARK(spectral_integral);

void gauss_kronrod_exponential_tail(benchmark::State& state)
{
    auto f = [](double x) { return x * x * std::exp(-x); };
    auto tail = [](double y) { return std::exp(-y) * (y * y + 2 * y + 2); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(quadrature::integrate_to_infinity(f, 0.0, tail, 1e-12, 0.0, 2000).value);
    }
}
BENCHMARK(gauss_kronrod_exponential_tail);

} // namespace

BENCHMARK_MAIN();
