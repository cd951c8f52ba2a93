#include <benchmark/benchmark.h>

#include "looijenga/cohomology.hpp"
#include "looijenga/theta.hpp"

using namespace looijenga;

namespace {

QuadraticForm cartan(std::size_t d) {
  IntMatrix c(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    c(i, i) = 2;
    if (i + 1 < d) c(i, i + 1) = c(i + 1, i) = -1;
  }
  return QuadraticForm::scalar(c);
}

void BM_ThetaEval(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const QuadraticForm q = cartan(d);
  const ThetaContext ctx(q, Complex(0.1, 0.9));
  const DualCosetRep u = dual_coset_reps(q).back();
  const ComplexVector z(d, Complex(0.2, 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(theta_eval(ctx, u, z));
}
BENCHMARK(BM_ThetaEval)->DenseRange(1, 3);

void BM_HilbertFunction(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const GradedPresentation p = presentation(cartan(d), 2);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_function(p, 12));
}
BENCHMARK(BM_HilbertFunction)->DenseRange(1, 3);

void BM_IdealInvariance(benchmark::State& state) {
  const QuadraticForm q = cartan(2);
  const GradedPresentation p = presentation(q, 2);
  WreathElement w = WreathElement::identity(2, 2, 1);
  w.A = IntMatrix{{2, 1}, {1, 1}};
  w.ext.m = IntMatrix{{1, -2}, {3, 0}};
  const RingSubstitution s = substitution_from_wreath(q, w);
  for (auto _ : state) benchmark::DoNotOptimize(ideal_invariance_check(p, s));
}
BENCHMARK(BM_IdealInvariance);

}  // namespace
BENCHMARK_MAIN();
