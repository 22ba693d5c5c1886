#include <benchmark/benchmark.h>

#include "zetakit/explicit0.hpp"
#include "zetakit/fqcurve.hpp"
#include "zetakit/zeros.hpp"

using namespace zetakit;

namespace {

const fqcurve::PlaneCurve& quartic() {
  static const fqcurve::PlaneCurve c = fqcurve::parse_curve("x^4 + y^4 + z^4 mod 7");
  return c;
}

// Args: extension degree m, thread count.
void BM_CountPoints(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const fqcurve::CountOptions opt{static_cast<int>(state.range(1)), true};
  for (auto _ : state) benchmark::DoNotOptimize(fqcurve::count_points(quartic(), m, opt));
}
BENCHMARK(BM_CountPoints)->ArgsProduct({{2, 3}, {1, 0}})->Unit(benchmark::kMillisecond);

void BM_CountPointsReference(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fqcurve::count_points_reference(quartic(), m));
}
BENCHMARK(BM_CountPointsReference)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

// f^(rho) for a log-gaussian, the summand of the explicit formula.
const zeros::Evaluator& mellin_summand() {
  static const explicit0::TestFunction f = explicit0::TestFunction::log_gaussian(0.5);
  static const zeros::Evaluator e = [](Complex s) { return explicit0::mellin0(f, s); };
  return e;
}

void BM_SumOverZeros(benchmark::State& state) {
  const auto& table = zeros::bundled_zero_table();
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeros::sum_over_zeros(table, mellin_summand(), static_cast<double>(state.range(0)), threads));
  }
}
BENCHMARK(BM_SumOverZeros)->ArgsProduct({{50, 200}, {1, 0}})->Unit(benchmark::kMillisecond);

void BM_SumOverZerosReference(benchmark::State& state) {
  const auto& table = zeros::bundled_zero_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        zeros::sum_over_zeros_reference(table, mellin_summand(), static_cast<double>(state.range(0))));
  }
}
BENCHMARK(BM_SumOverZerosReference)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_WeilContour(benchmark::State& state) {
  static const explicit0::TestFunction f = explicit0::TestFunction::log_gaussian(0.25);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(explicit0::weil_contour_oracle(f, 30.0, threads));
}
BENCHMARK(BM_WeilContour)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
