#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "uniqlab/interpolation.hpp"
#include "uniqlab/pairs.hpp"
#include "uniqlab/products.hpp"
#include "uniqlab/uniqueness.hpp"

using namespace uniqlab;

static void BM_ProductEval(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const products::ProductModel model(products::ZeroSet::arithmetic(1.0, n), n,
                                     products::TailMode::analytic);
  const std::complex<double> z(3.3, 1.7);
  for (auto _ : state) benchmark::DoNotOptimize(model.eval(z));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProductEval)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

static void BM_HermiteEvalAll(benchmark::State& state) {
  const uniqueness::HermiteBasis basis(static_cast<std::size_t>(state.range(0)));
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(basis.eval_all(x));
    x += 1e-9;
  }
}
BENCHMARK(BM_HermiteEvalAll)->Arg(11)->Arg(41)->Arg(161);

static void BM_SamplingSvd(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const uniqueness::HermiteBasis basis(N + 1);
  const auto lat = pairs::make_power_lattice(2.0, 0.4, 400);
  const auto pair = pairs::make_pair_spec(lat, lat, 2.0);
  const double R = std::sqrt(static_cast<double>(N) / 3.14159) + 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        uniqueness::smallest_singular_value(uniqueness::build_sampling_operator(pair, basis, R)));
  }
}
BENCHMARK(BM_SamplingSvd)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_InterpolantEval(benchmark::State& state) {
  std::vector<double> T(4010);
  for (std::size_t k = 0; k < T.size(); ++k) T[k] = static_cast<double>(k + 1);
  const auto sel = interpolation::select_uniform_subsequence(T, 2.0, 1, 1.5, 1);
  const interpolation::InterpolantModel model(
      sel, std::vector<std::complex<double>>(sel.t_prime.size(), 1.0));
  const std::complex<double> z(37.1, 4.2);
  for (auto _ : state) benchmark::DoNotOptimize(interpolation::interpolant_eval(model, z));
}
BENCHMARK(BM_InterpolantEval)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
