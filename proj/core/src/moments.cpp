#include "renyi/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "renyi/error.hpp"
#include "renyi/specfun.hpp"

namespace renyi {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TwoMomentParams TwoMomentParams::make(double r, double p, double q) {
  if (!(r > 0.0 && r < 1.0)) {
    throw InvalidMomentOrder("order r must lie in (0, 1), got " + std::to_string(r));
  }
  if (!std::isfinite(p) || !std::isfinite(q)) {
    throw InvalidMomentOrder("moment exponents must be finite");
  }
  const double pivot = 1.0 / r - 1.0;
  if (!(p < pivot && pivot < q)) {
    throw InvalidMomentOrder("need p < 1/r - 1 < q; got p=" + std::to_string(p) +
                             " q=" + std::to_string(q) + " r=" + std::to_string(r));
  }
  const double lambda = (q + 1.0 - 1.0 / r) / (q - p);
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw InvalidMomentOrder("lambda outside (0, 1) at machine precision");
  }
  return TwoMomentParams(r, p, q, lambda);
}

double lambda_of(double r, double p, double q) { return TwoMomentParams::make(r, p, q).lambda(); }

double log_psi_r(const TwoMomentParams& params) {
  return specfun::log_beta_tilde(params.beta_a(), params.beta_b()) -
         std::log(params.q() - params.p());
}

double psi_r(const TwoMomentParams& params) { return std::exp(log_psi_r(params)); }

double psi_half_closed(double p, double q) {
  const double l = TwoMomentParams::make(0.5, p, q).lambda();
  const double log_num = std::log(std::numbers::pi) - l * std::log(l) - (1.0 - l) * std::log1p(-l);
  return std::exp(log_num) / ((q - p) * std::sin(std::numbers::pi * l));
}

void MomentVector::validate() const {
  if (s.empty() || s.size() != nu.size()) {
    throw InvalidArgument("MomentVector: s and nu must be non-empty and of equal length");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isfinite(s[i])) throw InvalidArgument("MomentVector: non-finite exponent");
    if (!(nu[i] >= 0.0) || !std::isfinite(nu[i])) {
      throw InvalidArgument("MomentVector: weights must be finite and nonnegative");
    }
  }
}

double c_r_numeric(double r, const MomentVector& mv, const NumericsConfig& cfg) {
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("c_r_numeric: r must lie in (0, 1)");
  mv.validate();
  std::vector<double> log_nu;
  std::vector<double> s;
  for (std::size_t i = 0; i < mv.s.size(); ++i) {
    if (mv.nu[i] > 0.0) {
      log_nu.push_back(std::log(mv.nu[i]));
      s.push_back(mv.s[i]);
    }
  }
  if (log_nu.empty()) return kInf;

  const double c = r / (1.0 - r);
  // exp(y) * (sum_i nu_i e^{s_i y})^{-c}, the integrand after x = e^y
  auto integrand = [&](double y) {
    double peak = -kInf;
    for (std::size_t i = 0; i < s.size(); ++i) peak = std::max(peak, log_nu[i] + s[i] * y);
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) acc += std::exp(log_nu[i] + s[i] * y - peak);
    return std::exp(y - c * (peak + std::log(acc)));
  };
  double integral;
  try {
    integral = integrate(integrand, Domain::full_line(), cfg).value;
  } catch (const DivergenceDetected&) {
    return kInf;
  }
  if (!std::isfinite(integral)) return kInf;
  return std::exp(std::log(integral) / c);
}

Support Support::euclidean(int n) {
  if (n < 1) throw InvalidArgument("Support::euclidean: n must be >= 1");
  return Support(Kind::euclidean, n, std::exp(log_omega_euclidean(n)));
}

Support Support::custom(int n, double omega_value) {
  if (n < 1) throw InvalidArgument("Support::custom: n must be >= 1");
  const double cap = std::exp(log_omega_euclidean(n));
  if (!(omega_value > 0.0) || omega_value > cap * (1.0 + 1e-12)) {
    throw InvalidArgument("Support::custom: omega must lie in (0, omega(R^n)]");
  }
  return Support(Kind::custom, n, omega_value);
}

double log_omega_euclidean(int n) {
  if (n < 1) throw InvalidArgument("log_omega_euclidean: n must be >= 1");
  if (n == 1) return std::numbers::ln2;
  if (n == 2) return std::log(std::numbers::pi);
  const double half_n = 0.5 * n;
  return half_n * std::log(std::numbers::pi) - specfun::ln_gamma(half_n + 1.0);
}

double log_omega(const Support& sup) {
  switch (sup.kind()) {
    case Support::Kind::positive_half_line:
      return 0.0;
    case Support::Kind::real_line:
      return std::numbers::ln2;
    case Support::Kind::euclidean:
      return log_omega_euclidean(sup.dimension());
    case Support::Kind::custom:
    default:
      return std::log(sup.stored_omega());
  }
}

double omega(const Support& sup) {
  switch (sup.kind()) {
    case Support::Kind::positive_half_line:
      return 1.0;
    case Support::Kind::real_line:
      return 2.0;
    default:
      return sup.stored_omega();
  }
}

double two_moment_bound(double mu_np, double mu_nq, const TwoMomentParams& params,
                        const Support& sup) {
  if (!(mu_np >= 0.0) || !(mu_nq >= 0.0) || std::isinf(mu_np) || std::isinf(mu_nq)) {
    throw InvalidArgument("two_moment_bound: moments must be finite and nonnegative");
  }
  if (mu_np == 0.0 || mu_nq == 0.0) return 0.0;
  const double r = params.r();
  const double l = params.lambda();
  const double log_bound = ((1.0 - r) / r) * (log_omega(sup) + log_psi_r(params)) +
                           l * std::log(mu_np) + (1.0 - l) * std::log(mu_nq);
  return std::exp(log_bound);
}

double k_moment_bound(const MomentVector& mv, std::span<const double> moments, double r,
                      const NumericsConfig& cfg) {
  mv.validate();
  if (moments.size() != mv.s.size()) {
    throw InvalidArgument("k_moment_bound: one moment per exponent required");
  }
  double weighted = 0.0;
  bool all_zero = true;
  for (std::size_t i = 0; i < moments.size(); ++i) {
    if (!(moments[i] >= 0.0)) throw InvalidArgument("k_moment_bound: negative moment");
    if (moments[i] != 0.0) all_zero = false;
    if (mv.nu[i] > 0.0) weighted += mv.nu[i] * moments[i];
  }
  if (all_zero) return 0.0;
  const double c = c_r_numeric(r, mv, cfg);
  if (std::isinf(c)) return kInf;
  return c * weighted;
}

}  // namespace renyi
