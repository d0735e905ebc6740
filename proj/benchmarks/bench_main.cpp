#include <benchmark/benchmark.h>

#include <numbers>

#include "hardylab/classifier.hpp"
#include "hardylab/disk_geometry.hpp"
#include "hardylab/orbit_lab.hpp"
#include "hardylab/shift_operators.hpp"
#include "hardylab/symbol_products.hpp"
#include "hardylab/symbols.hpp"

using namespace hardylab;

namespace {

const cplx kGolden = std::polar(1.0, 2.0 * std::numbers::pi * (std::numbers::phi - 1.0));

void BM_EvalProduct(benchmark::State& state) {
  const ProductSequence seq(CoefficientFunction{0.9, 0.5}, kGolden, ProductKind::Psi);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_product(seq, n, cplx(0.3, 0.4)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalProduct)->RangeMultiplier(8)->Range(8, 32768)->Complexity(benchmark::oN);

void BM_ProductCoefficients(benchmark::State& state) {
  const CoefficientFunction phi{1.0, 1.0};
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi_product_coefficients(phi, 0.5, 64, order));
}
BENCHMARK(BM_ProductCoefficients)->RangeMultiplier(4)->Range(16, 1024);

void BM_InfiniteProductLimit(benchmark::State& state) {
  const CoefficientFunction phi{1.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(infinite_product_limit(phi, 0.5, 128, 1e-12));
}
BENCHMARK(BM_InfiniteProductLimit);

void BM_OperatorNorm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = build_eigenoperator(cplx(0.0, 0.9), random_function(n, 8, 7), n);
  for (auto _ : state) benchmark::DoNotOptimize(operator_norm_estimate(x));
}
BENCHMARK(BM_OperatorNorm)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

void BM_WitnessSearch(benchmark::State& state) {
  const auto schedule = default_schedule(static_cast<std::size_t>(state.range(0)));
  const auto phi = psi_family(0.5).coeffs;
  for (auto _ : state) benchmark::DoNotOptimize(witness_search(WitnessKind::PsiToZero, phi, kGolden, schedule));
}
BENCHMARK(BM_WitnessSearch)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ClassifyWorkedExample(benchmark::State& state) {
  const auto lam = LambdaSpec::gaussian(Rational::make(0, 1), Rational::make(1, 1));
  for (auto _ : state) benchmark::DoNotOptimize(classify_dynamics(lam, example_phi1()));
}
BENCHMARK(BM_ClassifyWorkedExample)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
