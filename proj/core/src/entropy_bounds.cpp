#include "renyi/entropy_bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "renyi/error.hpp"
#include "renyi/optimize.hpp"
#include "renyi/specfun.hpp"

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLambdaLo = 1e-4;
constexpr double kLambdaHi = 1.0 - 1e-4;
constexpr double kLogSpreadLo = -16.0;
constexpr double kLogSpreadHi = 8.0;

void check_order(double r) {
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("order r must lie in (0, 1)");
}

// log r^{1/(r-1)}
double log_r_pow(double r) { return std::log(r) / (r - 1.0); }

double theta_triple(double r, double lambda) {
  const double c = r / (1.0 - r);
  return specfun::theta(c * lambda) + specfun::theta(c * (1.0 - lambda)) - specfun::theta(c);
}

}  // namespace

BoundReport entropy_bound(const ScalarDistribution& d, const Support& sup, int n, double r,
                          double p, double q, const NumericsConfig& cfg) {
  if (n != sup.dimension()) {
    throw InvalidArgument("entropy_bound: n=" + std::to_string(n) +
                          " does not match the support dimension");
  }
  const auto params = TwoMomentParams::make(r, p, q);
  BoundReport rep;
  rep.r = r;
  rep.p = p;
  rep.q = q;
  rep.lambda = params.lambda();
  rep.bound = log_omega(sup) + log_psi_r(params) + L_r(d, params, n, cfg);
  try {
    rep.entropy = renyi_entropy(d, r, cfg);
    rep.gap = rep.bound - *rep.entropy;
  } catch (const Unsupported&) {
  }
  return rep;
}

double log_penalty(double x) {
  if (!(x > 0.0)) throw DomainError("log_penalty: x must be positive");
  return x - std::log(x) - 1.0;
}

double lognormal_gap_closed(double r) {
  check_order(r);
  const double c = r / (1.0 - r);
  return 2.0 * specfun::theta(0.5 * c) - specfun::theta(c) + 0.5 * (1.0 + std::log(r) / (1.0 - r));
}

double lognormal_gap_closed_beta(double r) {
  check_order(r);
  const double c = r / (1.0 - r);
  return specfun::log_beta_tilde(0.5 * c, 0.5 * c) + 0.5 * std::log(0.25 * c) + 0.5 -
         0.5 * (std::log(2.0 * std::numbers::pi) + log_r_pow(r));
}

double lognormal_gap_at(double r, double lambda, double u, double sigma2) {
  check_order(r);
  if (!(lambda > 0.0 && lambda < 1.0)) throw InvalidArgument("lambda must lie in (0, 1)");
  if (!(u > 0.0) || !(sigma2 > 0.0)) throw InvalidArgument("u and sigma2 must be positive");
  const double us = u * sigma2;
  return theta_triple(r, lambda) + 0.5 * us - 0.5 * std::log(us) - 0.5 * log_r_pow(r);
}

std::pair<double, double> lognormal_pq(double r, double lambda, double u) {
  check_order(r);
  const double c0 = (1.0 - r) / r;
  const double d = std::sqrt(c0 * u / (lambda * (1.0 - lambda)));
  return {c0 - (1.0 - lambda) * d, c0 + lambda * d};
}

double lognormal_gap_p_zero(double r, double q, double sigma2) {
  check_order(r);
  const double c0 = (1.0 - r) / r;
  if (!(q > c0)) throw InvalidMomentOrder("lognormal_gap_p_zero: need q > (1-r)/r");
  const double c = r / (1.0 - r);
  return lognormal_gap_closed(r) + 0.5 * log_penalty((q - c0) * sigma2) +
         specfun::theta(c - 1.0 / q) + specfun::theta(1.0 / q) - 2.0 * specfun::theta(0.5 * c);
}

GapReport optimal_gap(const ScalarDistribution& d, const Support& sup, int n, double r,
                      GapSearch search, const NumericsConfig& cfg) {
  check_order(r);
  if (n != sup.dimension()) throw InvalidArgument("optimal_gap: dimension mismatch");
  const double h = renyi_entropy(d, r, cfg);
  const double log_w = log_omega(sup);
  const double c0 = (1.0 - r) / r;

  auto gap_at = [&](double p, double q) {
    try {
      const auto params = TwoMomentParams::make(r, p, q);
      return log_w + log_psi_r(params) + L_r(d, params, n, cfg) - h;
    } catch (const MomentDiverges&) {
      return kInf;
    } catch (const InvalidMomentOrder&) {
      return kInf;
    }
  };

  GapReport rep;
  rep.r = r;
  rep.entropy = h;
  if (search == GapSearch::p_zero) {
    auto obj = [&](double w) { return gap_at(0.0, c0 + std::exp(w)); };
    const auto best = golden_minimize(obj, kLogSpreadLo - 4.0, kLogSpreadHi + 4.0);
    rep.p = 0.0;
    rep.q = c0 + std::exp(best.x);
    rep.gap = best.value;
    rep.optimizer_trace.push_back({std::nan(""), std::exp(best.x), best.value});
  } else {
    double best_w = 0.0;
    auto inner = [&](double lambda) {
      auto obj = [&](double w) {
        const double dd = std::exp(w);
        return gap_at(c0 - (1.0 - lambda) * dd, c0 + lambda * dd);
      };
      const auto m = golden_minimize(obj, kLogSpreadLo, kLogSpreadHi);
      best_w = m.x;
      const double u = std::exp(2.0 * m.x) * lambda * (1.0 - lambda) / c0;
      rep.optimizer_trace.push_back({lambda, u, m.value});
      return m.value;
    };
    const auto outer = golden_minimize(inner, kLambdaLo, kLambdaHi);
    inner(outer.x);
    const double dd = std::exp(best_w);
    rep.p = c0 - (1.0 - outer.x) * dd;
    rep.q = c0 + outer.x * dd;
    rep.gap = rep.optimizer_trace.back().value;
  }
  rep.bound = rep.gap + h;
  return rep;
}

double GaussGapParams::spread() const {
  return std::sqrt(2.0 * (1.0 - r) * z / (lambda * (1.0 - lambda) * n));
}

bool GaussGapParams::feasible() const {
  if (!(r > 0.0 && r < 1.0) || n < 1 || !(lambda > 0.0 && lambda < 1.0) || !(z > 0.0)) {
    return false;
  }
  return (1.0 - lambda) * spread() < 1.0;
}

std::pair<double, double> GaussGapParams::pq() const {
  const double c0 = (1.0 - r) / r;
  const double d = spread();
  return {c0 - (1.0 - lambda) * d / r, c0 + lambda * d / r};
}

double gaussian_Q(const GaussGapParams& g) {
  if (!g.feasible()) throw Infeasible("gaussian_Q: (lambda, z) outside the feasible set");
  const double c = g.r / (1.0 - g.r);
  const double base = g.n / (2.0 * g.r);
  const double d = g.spread();
  const double lo = base * (1.0 - (1.0 - g.lambda) * d);
  const double hi = base * (1.0 + g.lambda * d);
  return c * g.lambda * specfun::ln_gamma(lo) + c * (1.0 - g.lambda) * specfun::ln_gamma(hi) -
         c * specfun::ln_gamma(base);
}

double gaussian_Q_lower_bound(const GaussGapParams& g) {
  if (!g.feasible()) throw Infeasible("gaussian_Q_lower_bound: infeasible (lambda, z)");
  const double b = 2.0 * (1.0 - g.r) / (9.0 * g.n);
  return 0.5 * g.z / (1.0 + std::sqrt(g.lambda / (1.0 - g.lambda) * b * g.z));
}

double gaussian_gap(const GaussGapParams& g) {
  const double q = gaussian_Q(g);
  const double c = g.r / (1.0 - g.r);
  return theta_triple(g.r, g.lambda) + q - 0.5 * std::log(g.z) - 0.5 * log_r_pow(g.r) +
         c * specfun::theta(g.n / (2.0 * g.r)) - specfun::theta(0.5 * g.n) / (1.0 - g.r);
}

GapReport optimal_gaussian_gap(double r, int n) {
  check_order(r);
  if (n < 1) throw InvalidArgument("optimal_gaussian_gap: n must be >= 1");
  GapReport rep;
  rep.r = r;
  rep.entropy = 0.5 * n * (std::log(2.0 * std::numbers::pi) + log_r_pow(r));
  double best_z = 1.0;
  auto inner = [&](double lambda) {
    auto obj = [&](double w) {
      const GaussGapParams g{r, n, lambda, std::exp(w)};
      return g.feasible() ? gaussian_gap(g) : kInf;
    };
    const double z_max = lambda * n / (2.0 * (1.0 - r) * (1.0 - lambda));
    const double hi = std::min(kLogSpreadHi, std::log(z_max));
    const double lo = std::min(kLogSpreadLo, hi - 8.0);
    const auto m = golden_minimize(obj, lo, hi);
    best_z = std::exp(m.x);
    rep.optimizer_trace.push_back({lambda, best_z, m.value});
    return m.value;
  };
  const auto outer = golden_minimize(inner, kLambdaLo, kLambdaHi);
  inner(outer.x);
  const GaussGapParams g{r, n, outer.x, best_z};
  std::tie(rep.p, rep.q) = g.pq();
  rep.gap = rep.optimizer_trace.back().value;
  rep.bound = rep.gap + rep.entropy;
  return rep;
}

std::vector<Prop6Row> prop6_limit_check(double r, int n_max) {
  if (n_max < 1) throw InvalidArgument("prop6_limit_check: n_max must be >= 1");
  const double limit = lognormal_gap_closed(r);
  std::vector<Prop6Row> rows;
  for (int n = 1; n <= n_max; n *= 2) {
    rows.push_back({n, optimal_gaussian_gap(r, n).gap, limit});
    if (n > n_max / 2) break;
  }
  return rows;
}

double mult_bound_check(const ScalarDistribution& dY, const ScalarDistribution& dX, double t,
                        double r, double p, double q, const NumericsConfig& cfg) {
  check_order(r);
  if (!is_discrete(dX)) throw Unsupported("mult_bound_check: X must be discrete");
  if (std::holds_alternative<GaussianMagnitude>(dY) || is_discrete(dY)) {
    throw Unsupported("mult_bound_check: Y must be a scalar law with a density");
  }
  if (!(p > 0.0)) throw InvalidMomentOrder("mult_bound_check: need 0 < p");
  const auto xs = atoms(dX);
  for (const auto& [x, w] : xs) {
    if (!(x > 0.0 && x <= t)) throw InvalidArgument("mult_bound_check: X must lie in (0, t]");
  }
  auto product_pdf = [&](double v) {
    double acc = 0.0;
    for (const auto& [x, w] : xs) acc += w * pdf(dY, v / x) / x;
    return acc;
  };
  auto fr = [&](double v) {
    const double f = product_pdf(v);
    return f > 0.0 ? std::pow(f, r) : 0.0;
  };
  const double h_xy = std::log(integrate(fr, density_domain(dY), cfg).value) / (1.0 - r);
  const double h_ty = renyi_entropy(dY, r, cfg) + std::log(t);
  const auto rep = entropy_bound(dY, natural_support(dY), 1, r, p, q, cfg);
  return h_xy - h_ty - *rep.gap;
}

DiffEntropyBounds diff_entropy_bounds(const ScalarDistribution& d, int n, double s,
                                      const NumericsConfig& cfg) {
  if (n < 1) throw InvalidArgument("diff_entropy_bounds: n must be >= 1");
  if (!(s > 0.0)) throw InvalidArgument("diff_entropy_bounds: s must be positive");
  const double lm = log_moment(d, s, cfg);
  if (!std::isfinite(lm)) throw MomentDiverges("diff_entropy_bounds: moment of order s diverges");
  DiffEntropyBounds out;
  const double ns = static_cast<double>(n) / s;
  out.moment = specfun::ln_gamma(ns + 1.0) - specfun::ln_gamma(0.5 * n + 1.0) +
               0.5 * n * std::log(std::numbers::pi) + ns * (1.0 + std::log(s) + lm - std::log(n));
  const auto mv = log_mean_var(d, cfg);
  if (mv.var > 0.0 && std::isfinite(mv.var) && std::isfinite(mv.mean)) {
    out.log_moment = mv.mean + 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * mv.var);
  }
  return out;
}

std::pair<double, double> psi_limit_params(double r, double lambda, double u) {
  check_order(r);
  if (!(lambda > 0.0 && lambda < 1.0) || !(u > 0.0)) {
    throw InvalidArgument("psi_limit_params: need lambda in (0, 1) and u > 0");
  }
  const double c0 = (1.0 - r) / r;
  return {c0 - std::sqrt(c0 * (1.0 - lambda) / lambda * u),
          c0 + std::sqrt(c0 * lambda / (1.0 - lambda) * u)};
}

}  // namespace renyi
