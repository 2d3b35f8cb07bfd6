#include <benchmark/benchmark.h>

#include <cmath>

#include "renyi/moments.hpp"
#include "renyi/quadrature.hpp"
#include "renyi/specfun.hpp"

namespace {

void BM_LnGamma(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(renyi::specfun::ln_gamma(x));
    x = x < 50.0 ? x * 1.07 : 0.37;
  }
}
BENCHMARK(BM_LnGamma);

void BM_LogBetaTilde(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(renyi::specfun::log_beta_tilde(2.5, 0.75));
}
BENCHMARK(BM_LogBetaTilde);

void BM_LambertW0(benchmark::State& state) {
  double z = -0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(renyi::specfun::lambert_w0(z));
    z = z < 1e4 ? z + 0.731 : -0.3;
  }
}
BENCHMARK(BM_LambertW0);

void BM_Kappa(benchmark::State& state) {
  const double t = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(renyi::specfun::kappa(t));
}
BENCHMARK(BM_Kappa)->Arg(2)->Arg(10)->Arg(1000);

void BM_PsiClosedForm(benchmark::State& state) {
  const auto params = renyi::TwoMomentParams::make(0.5, 0.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(renyi::log_psi_r(params));
}
BENCHMARK(BM_PsiClosedForm);

void BM_CrNumeric(benchmark::State& state) {
  const renyi::MomentVector mv{{0.0, 2.0}, {1.0, 1.0}};
  for (auto _ : state) benchmark::DoNotOptimize(renyi::c_r_numeric(0.5, mv));
}
BENCHMARK(BM_CrNumeric);

void BM_IntegrateHalfLine(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        renyi::integrate([](double x) { return x * x * std::exp(-x); }, renyi::Domain::half_line(0.0), {}));
  }
}
BENCHMARK(BM_IntegrateHalfLine);

}  // namespace
