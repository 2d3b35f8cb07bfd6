#include <benchmark/benchmark.h>

#include <cmath>

#include "renyi/distributions.hpp"
#include "renyi/entropy_bounds.hpp"
#include "renyi/mi_bounds.hpp"

namespace dist = renyi::dist;

namespace {

void BM_LognormalOptimalGap(benchmark::State& state) {
  const auto d = dist::lognormal(0.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        renyi::optimal_gap(d, renyi::Support::positive_half_line(), 1, 0.3, renyi::GapSearch::two_moment));
  }
}
BENCHMARK(BM_LognormalOptimalGap)->Unit(benchmark::kMillisecond);

void BM_GaussianOptimalGap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(renyi::optimal_gaussian_gap(0.1, n));
}
BENCHMARK(BM_GaussianOptimalGap)->Arg(1)->Arg(64)->Arg(4096)->Unit(benchmark::kMicrosecond);

void BM_RenyiEntropyGaussian(benchmark::State& state) {
  const auto d = dist::gaussian(0.3, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(renyi::renyi_entropy(d, 0.4));
}
BENCHMARK(BM_RenyiEntropyGaussian);

void BM_MixtureMutualInformation(benchmark::State& state) {
  const double e = 1e-2;
  const auto ch = renyi::ChannelModel::scale_mixture(dist::two_point(e, 1.0 + 1.0 / std::sqrt(e)));
  for (auto _ : state) benchmark::DoNotOptimize(renyi::mi_oracle(ch, renyi::Conditioning::given_U));
}
BENCHMARK(BM_MixtureMutualInformation)->Unit(benchmark::kMillisecond);

void BM_MixtureProp9(benchmark::State& state) {
  const double e = 1e-2;
  const auto ch = renyi::ChannelModel::scale_mixture(dist::two_point(e, 1.0 + 1.0 / std::sqrt(e)));
  for (auto _ : state) benchmark::DoNotOptimize(renyi::prop9_bound(ch, 0.0, 2.0, renyi::Conditioning::given_U));
}
BENCHMARK(BM_MixtureProp9)->Unit(benchmark::kMillisecond);

void BM_ChiSquareGivenX(benchmark::State& state) {
  const double e = 1e-2;
  const auto ch = renyi::ChannelModel::scale_mixture(dist::two_point(e, 1.0 + 1.0 / std::sqrt(e)));
  for (auto _ : state) benchmark::DoNotOptimize(renyi::chi2_mi_bound(ch, renyi::Conditioning::given_X));
}
BENCHMARK(BM_ChiSquareGivenX)->Unit(benchmark::kMillisecond);

void BM_VsKernelMonteCarlo(benchmark::State& state) {
  renyi::NumericsConfig cfg;
  cfg.mc_samples = state.range(0);
  const auto ch = renyi::ChannelModel::scale_mixture(dist::lognormal(0.0, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(renyi::V_s_kernel(ch, 0.0, renyi::Conditioning::given_U, cfg));
}
BENCHMARK(BM_VsKernelMonteCarlo)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
