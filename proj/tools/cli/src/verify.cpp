#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "commands.hpp"
#include "renyi/distributions.hpp"
#include "renyi/entropy_bounds.hpp"
#include "renyi/mi_bounds.hpp"
#include "renyi/moments.hpp"
#include "renyi/optimize.hpp"
#include "renyi/specfun.hpp"

namespace renyi::cli::detail {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  double observed;
  double limit;
  bool passed;
};

// observed <= limit
Outcome at_most(double observed, double limit) { return {observed, limit, observed <= limit}; }
// observed >= limit
Outcome at_least(double observed, double limit) { return {observed, limit, observed >= limit}; }

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(a + (b - a) * i / (n - 1));
  return out;
}

std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(i == 0 ? a : i == n - 1 ? b : std::exp(std::log(a) + (std::log(b) - std::log(a)) * i / (n - 1)));
  }
  return out;
}

struct HalfLineDensity {
  std::function<double(double)> pdf;
  std::function<double(double)> moment;
};

std::vector<HalfLineDensity> test_densities() {
  return {
      {[](double x) { return std::exp(-x); }, [](double s) { return std::tgamma(s + 1.0); }},
      {[](double x) { return x * std::exp(-x); }, [](double s) { return std::tgamma(s + 2.0); }},
      {[](double x) {
         const double l = std::log(x);
         return std::exp(-0.5 * l * l) / (x * std::sqrt(2.0 * kPi));
       },
       [](double s) { return std::exp(0.5 * s * s); }},
      {[](double x) { return std::sqrt(2.0 / kPi) * std::exp(-0.5 * x * x); },
       [](double s) { return std::pow(2.0, 0.5 * s) * std::tgamma(0.5 * (s + 1.0)) / std::sqrt(kPi); }},
  };
}

// (r, p, q) with p < 1/r - 1 < q and p > -1 so every test density has both moments.
std::vector<std::array<double, 3>> order_grid() {
  std::vector<std::array<double, 3>> out;
  for (double r : {0.3, 0.5, 0.7}) {
    const double t = 1.0 / r - 1.0;
    for (double dp : {0.3, 0.6, 0.9}) {
      for (double dq : {0.5, 1.0, 2.5}) out.push_back({r, t - dp * (t + 1.0), t + dq});
    }
  }
  return out;
}

double r_norm(const std::function<double(double)>& f, double r) {
  NumericsConfig cfg;
  cfg.rel_tol = 1e-11;
  cfg.abs_tol = 1e-14;
  cfg.max_subdivisions = 20000;
  const auto res = integrate([&](double x) { const double v = f(x); return v > 0.0 ? std::pow(v, r) : 0.0; },
                             Domain::half_line(0.0), cfg);
  return std::pow(res.value, 1.0 / r);
}

std::vector<double> fig3_grid() { return logspace(1e-4, 0.5, 25); }

ChannelModel fig3_channel(double e) {
  return ChannelModel::scale_mixture(dist::two_point(e, 1.0 + 1.0 / std::sqrt(e)));
}

}  // namespace

Table verify(const NumericsConfig& cfg) {
  using Fn = std::function<Outcome()>;
  std::vector<std::pair<std::string, Fn>> checks;

  // Special functions.
  checks.emplace_back("specfun.reflection", [] {
    double worst = 0.0;
    for (double x : linspace(0.01, 0.99, 99)) {
      const double lhs = specfun::ln_gamma(x) + specfun::ln_gamma(1.0 - x);
      worst = std::max(worst, std::abs(lhs - std::log(kPi / std::sin(kPi * x))));
    }
    return at_most(worst, 1e-12);
  });
  checks.emplace_back("specfun.theta_decreasing_convex", [] {
    const auto xs = logspace(0.05, 200.0, 200);
    double worst = kInf;
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
      const double a = specfun::theta(xs[i - 1]);
      const double b = specfun::theta(xs[i]);
      const double c = specfun::theta(xs[i + 1]);
      const double h0 = xs[i] - xs[i - 1];
      const double h1 = xs[i + 1] - xs[i];
      const double second = ((c - b) / h1 - (b - a) / h0);
      worst = std::min({worst, a - b, second});
    }
    return at_least(worst, 0.0);
  });
  checks.emplace_back("specfun.beta_tilde_identities", [] {
    double worst = 0.0;
    for (double x : {0.1, 0.5, 1.0, 3.0, 20.0}) {
      for (double y : {0.2, 1.0, 2.5, 50.0}) {
        const double direct = std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y) +
                              (x + y) * std::log(x + y) - x * std::log(x) - y * std::log(y);
        worst = std::max(worst, std::abs(specfun::log_beta_tilde(x, y) - direct));
        worst = std::max(worst, std::abs(specfun::log_beta_tilde(x, y) - specfun::log_beta_tilde(y, x)));
      }
    }
    return at_most(worst, 1e-11);
  });
  checks.emplace_back("specfun.lambert_residual", [] {
    double worst = 0.0;
    for (double z : {-0.36787944117144233, -0.3, -0.1, 0.0, 0.5, 1.0, 10.0, 1e3, 1e6}) {
      const double w = specfun::lambert_w0(z);
      worst = std::max(worst, std::abs(w * std::exp(w) - z) / std::max(1.0, std::abs(z)));
    }
    return at_most(worst, 1e-12);
  });
  checks.emplace_back("specfun.kappa_at_one", [] { return at_most(std::abs(specfun::kappa(1.0) - 1.0), 0.0); });
  // Below t ~ 0.03, t kappa(t) equals 1/e to the last bit, so the lower
  // envelope is checked as a relative margin of a few ulps.
  checks.emplace_back("specfun.kappa_envelope", [] {
    double worst = kInf;
    for (double t : logspace(1e-3, 0.999, 60)) {
      const double k = specfun::kappa(t);
      worst = std::min({worst, k * std::numbers::e * t - 1.0, 1.0 - k * t});
    }
    return at_least(worst, -1e-15);
  });
  checks.emplace_back("specfun.t_kappa_nondecreasing", [] {
    const auto ts = logspace(1e-3, 0.999, 60);
    double worst = kInf;
    for (std::size_t i = 1; i < ts.size(); ++i) {
      worst = std::min(worst, ts[i] * specfun::kappa(ts[i]) - ts[i - 1] * specfun::kappa(ts[i - 1]));
    }
    return at_least(worst, -1e-15);
  });
  checks.emplace_back("specfun.t_kappa_small_t", [] {
    return at_most(std::abs(0.001 * specfun::kappa(0.001) - 1.0 / std::numbers::e), 2e-2);
  });

  // Two-moment inequality.
  checks.emplace_back("moments.bound_validity", [] {
    double worst = kInf;
    for (const auto& d : test_densities()) {
      for (const auto& [r, p, q] : order_grid()) {
        const auto params = TwoMomentParams::make(r, p, q);
        const double bound = two_moment_bound(d.moment(p), d.moment(q), params, Support::positive_half_line());
        worst = std::min(worst, bound - r_norm(d.pdf, r));
      }
    }
    return at_least(worst, -1e-9);
  });
  checks.emplace_back("moments.psi_matches_c_r", [] {
    const double mu_p = 1.3;
    const double mu_q = 2.7;
    double worst = 0.0;
    for (const auto& [r, p, q] : order_grid()) {
      const auto params = TwoMomentParams::make(r, p, q);
      auto objective = [&](double log_rho) {
        const double rho = std::exp(log_rho);
        return c_r_numeric(r, MomentVector{{p, q}, {1.0, rho}}) * (mu_p + rho * mu_q);
      };
      double best = -12.0;
      double best_v = objective(best);
      for (int i = 1; i <= 48; ++i) {
        const double x = -12.0 + 0.5 * i;
        const double v = objective(x);
        if (v < best_v) {
          best_v = v;
          best = x;
        }
      }
      GoldenOptions opt;
      opt.x_tol = 1e-9;
      const auto m = golden_minimize(objective, best - 0.5, best + 0.5, opt);
      const double closed = two_moment_bound(mu_p, mu_q, params, Support::positive_half_line());
      worst = std::max(worst, std::abs(m.value / closed - 1.0));
    }
    return at_most(worst, 1e-6);
  });

  // Lognormal gap.
  const auto rs = linspace(0.1, 0.9, 9);
  checks.emplace_back("entropy.lognormal_closed_forms", [&] {
    double worst = 0.0;
    for (double r : rs) worst = std::max(worst, std::abs(lognormal_gap_closed(r) - lognormal_gap_closed_beta(r)));
    return at_most(worst, 1e-10);
  });
  std::vector<std::vector<double>> optimized(rs.size());
  const std::vector<std::pair<double, double>> triples = {{0.0, 0.1}, {0.0, 1.0}, {1.5, 10.0}};
  checks.emplace_back("entropy.lognormal_optimizer", [&] {
    double worst = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      for (const auto& [mu, s2] : triples) {
        const double g = optimal_gap(dist::lognormal(mu, s2), Support::positive_half_line(), 1, rs[i],
                                     GapSearch::two_moment, cfg)
                             .gap;
        optimized[i].push_back(g);
        worst = std::max(worst, std::abs(g - lognormal_gap_closed(rs[i])));
      }
    }
    return at_most(worst, 1e-4);
  });
  checks.emplace_back("entropy.lognormal_invariance", [&] {
    double worst = 0.0;
    for (const auto& row : optimized) {
      if (row.empty()) continue;
      const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
      worst = std::max(worst, *hi - *lo);
    }
    return at_most(worst, 2e-4);
  });
  checks.emplace_back("entropy.lognormal_near_shannon", [] { return at_most(lognormal_gap_closed(0.999), 1e-2); });

  // Gaussian gap.
  checks.emplace_back("entropy.gaussian_Q_lower_bound", [] {
    double worst = kInf;
    for (double r : {0.1, 0.5, 0.9}) {
      for (int n : {1, 2, 5, 20, 100}) {
        for (double lambda : {0.2, 0.5, 0.8}) {
          for (double z : {0.1, 0.5, 1.0, 2.0}) {
            const GaussGapParams g{r, n, lambda, z};
            if (!g.feasible()) continue;
            worst = std::min(worst, gaussian_Q(g) - gaussian_Q_lower_bound(g));
          }
        }
      }
    }
    return at_least(worst, -1e-12);
  });
  checks.emplace_back("entropy.gaussian_Q_limit", [] {
    return at_most(std::abs(gaussian_Q(GaussGapParams{0.5, 10000, 0.5, 1.0}) - 0.5), 2e-2);
  });
  checks.emplace_back("entropy.gaussian_gap_nondecreasing", [] {
    double worst = kInf;
    double prev = -kInf;
    for (int n = 1; n <= 256; n *= 2) {
      const double g = optimal_gaussian_gap(0.1, n).gap;
      worst = std::min(worst, g - prev);
      prev = g;
    }
    return at_least(worst, 0.0);
  });
  checks.emplace_back("entropy.gaussian_lognormal_limit", [] {
    return Outcome{std::abs(optimal_gaussian_gap(0.1, 256).gap - lognormal_gap_closed(0.1)), 0.05,
                   std::abs(optimal_gaussian_gap(0.1, 256).gap - lognormal_gap_closed(0.1)) < 0.05};
  });

  // Differential entropy.
  checks.emplace_back("entropy.gaussian_max", [&] {
    const auto b = diff_entropy_bounds(dist::gaussian(0.0, 1.0), 1, 2.0, cfg);
    return at_most(std::abs(b.moment - 0.5 * std::log(2.0 * kPi * std::numbers::e)), 1e-8);
  });
  checks.emplace_back("entropy.log_moment_equality", [&] {
    double worst = 0.0;
    for (const auto& [mu, s2] : triples) {
      const auto d = dist::lognormal(mu, s2);
      const double h = mu + 0.5 * std::log(2.0 * kPi * std::numbers::e * s2);
      worst = std::max(worst, std::abs(diff_entropy_bounds(d, 1, 1.0, cfg).log_moment.value_or(kInf) - h));
    }
    return at_most(worst, 1e-6);
  });

  // Mutual information.
  checks.emplace_back("mi.awgn_capacity", [&] {
    double worst = 0.0;
    for (double v : {0.5, 1.0, 4.0}) {
      const auto ch = ChannelModel::awgn(dist::gaussian(0.0, v));
      worst = std::max(worst, std::abs(mi_oracle(ch, Conditioning::given_X, cfg) - 0.5 * std::log1p(v)));
    }
    return at_most(worst, 1e-6);
  });
  checks.emplace_back("mi.bounds_dominate", [&] {
    double worst = kInf;
    for (double v : {0.5, 1.0, 4.0}) {
      const auto ch = ChannelModel::awgn(dist::gaussian(0.0, v));
      const auto g = Conditioning::given_X;
      const double mi = mi_oracle(ch, g, cfg);
      std::vector<double> bounds = {prop9_bound(ch, 0.0, 2.0, g, cfg), chi2_mi_bound(ch, g, cfg)};
      for (double t : {0.25, 0.5, 0.75, 1.0}) bounds.push_back(prop7_bound(ch, t, g, cfg));
      for (double r : {0.25, 0.5, 0.75}) bounds.push_back(prop8_bound(ch, r, g, cfg));
      for (double b : bounds) worst = std::min(worst, b - mi);
    }
    return at_least(worst, 0.0);
  });
  checks.emplace_back("mi.marginal_mass", [&] {
    double worst = 0.0;
    for (const auto& ch : {ChannelModel::awgn(dist::gaussian(0.0, 2.0)), ChannelModel::awgn(dist::two_point(0.3, 2.5)),
                           ChannelModel::scale_mixture(dist::two_point(0.1, 11.0))}) {
      worst = std::max(worst, std::abs(marginal_mass(ch, cfg) - 1.0));
    }
    return at_most(worst, 1e-8);
  });
  checks.emplace_back("vs.direct_vs_kernel", [&] {
    // worst |direct - kernel| in standard errors
    double worst = 0.0;
    const std::vector<std::pair<ChannelModel, Conditioning>> cases = {
        {ChannelModel::awgn(dist::two_point(0.4, 3.0)), Conditioning::given_X},
        {ChannelModel::scale_mixture(dist::lognormal(0.0, 1.0)), Conditioning::given_U},
    };
    for (const auto& [ch, cond] : cases) {
      const auto direct = V_s_direct(ch, 0.0, cond, cfg);
      const auto kernel = V_s_kernel(ch, 0.0, cond, cfg);
      const double diff = std::abs(direct.value - kernel.value);
      const double se = kernel.standard_error.value_or(0.0);
      worst = std::max(worst, se > 0.0 ? diff / se : (diff <= 1e-9 ? 0.0 : kInf));
    }
    return at_most(worst, 4.0);
  });
  checks.emplace_back("vs.scaling_law", [&] {
    double worst = 0.0;
    const std::vector<std::pair<ChannelModel, Conditioning>> cases = {
        {ChannelModel::awgn(dist::two_point(0.3, 2.5)), Conditioning::given_X},
        {ChannelModel::scale_mixture(dist::two_point(0.2, 4.0)), Conditioning::given_U},
    };
    for (const auto& [ch, cond] : cases) {
      for (double a : {0.5, 2.0, 3.0}) {
        for (double s : {0.0, 2.0}) {
          const double base = V_s_direct(ch, s, cond, cfg).value;
          const double scaled = V_s_direct(ch.scaled(a), s, cond, cfg).value;
          worst = std::max(worst, std::abs(scaled - std::pow(a, s - 1.0) * base));
        }
      }
    }
    return at_most(worst, 1e-8);
  });
  checks.emplace_back("vs.constant_mixing_is_gaussian_input", [&] {
    double worst = 0.0;
    for (double c : {0.5, 1.0, 4.0}) {
      for (double s : {0.0, 0.5, 2.0}) {
        const double mix = V_s(ChannelModel::scale_mixture(dist::point_mass(c)), s, Conditioning::given_X, cfg).value;
        const double gauss = V_s(ChannelModel::awgn(dist::gaussian(0.0, c)), s, Conditioning::given_X, cfg).value;
        worst = std::max(worst, std::abs(mix - gauss));
      }
    }
    return at_most(worst, 1e-9);
  });
  checks.emplace_back("vs.upper_bound_residual", [&] {
    double worst = vs_upper_bound_check(ChannelModel::scale_mixture(dist::point_mass(3.0)), 1.0, cfg);
    worst = std::min(worst, vs_upper_bound_check(ChannelModel::scale_mixture(dist::two_point(0.5, 3.0)), 0.0, cfg));
    worst = std::min(worst, vs_upper_bound_check(ChannelModel::scale_mixture(dist::two_point(0.1, 11.0)), 2.0, cfg));
    return at_least(worst, -1e-12);
  });
  checks.emplace_back("vs.pairwise_bound", [&] {
    // V_s(Y|U) <= sum_u w_u (1 - w_u) K_s(u, u), K_s(u, u) = G((1+s)/2)/(2 pi) (1+u)^{(s-1)/2}
    double worst = kInf;
    for (const auto& [e, a] : std::vector<std::pair<double, double>>{{0.5, 3.0}, {0.1, 11.0}, {0.01, 101.0}}) {
      for (double s : {0.0, 1.0, 2.0}) {
        const auto ch = ChannelModel::scale_mixture(dist::two_point(e, a));
        double bound = 0.0;
        for (const auto& [u, w] : atoms(ch.law())) {
          bound += w * (1.0 - w) * std::tgamma(0.5 * (1.0 + s)) / (2.0 * kPi) * std::pow(1.0 + u, 0.5 * (s - 1.0));
        }
        worst = std::min(worst, bound - V_s(ch, s, Conditioning::given_U, cfg).value);
      }
    }
    return at_least(worst, -1e-12);
  });

  // Scale-mixture sweep: eps in logspace(1e-4, 0.5, 25), a = 1 + 1/sqrt(eps).
  const auto eps = fig3_grid();
  std::vector<double> mi(eps.size()), p9(eps.size()), chi2(eps.size());
  bool swept = false;
  auto sweep = [&] {
    if (swept) return;
    for (std::size_t i = 0; i < eps.size(); ++i) {
      const auto ch = fig3_channel(eps[i]);
      mi[i] = mi_oracle(ch, Conditioning::given_U, cfg);
      p9[i] = prop9_bound(ch, 0.0, 2.0, Conditioning::given_U, cfg);
      chi2[i] = chi2_mi_bound(ch, Conditioning::given_X, cfg);
    }
    swept = true;
  };
  checks.emplace_back("fig3.prop9_monotone_in_eps", [&] {
    // number of grid steps where the bound decreases as eps grows
    sweep();
    double violations = 0.0;
    for (std::size_t i = 1; i < eps.size(); ++i) {
      if (p9[i] < p9[i - 1]) violations += 1.0;
    }
    return at_most(violations, 0.0);
  });
  checks.emplace_back("fig3.chi2_floor_above_prop9", [&] {
    sweep();
    return at_least(*std::min_element(chi2.begin(), chi2.end()) - p9.front(), 0.0);
  });
  checks.emplace_back("fig3.mi_below_bounds", [&] {
    sweep();
    double worst = kInf;
    for (std::size_t i = 0; i < eps.size(); ++i) worst = std::min({worst, p9[i] - mi[i], chi2[i] - mi[i]});
    return at_least(worst, 0.0);
  });

  Table t;
  t.columns = {"check", "observed", "limit", "passed"};
  for (const auto& [name, fn] : checks) {
    Outcome o{std::nan(""), std::nan(""), false};
    try {
      o = fn();
    } catch (const std::exception&) {
      o.passed = false;
    }
    t.all_passed = t.all_passed && o.passed;
    t.rows.push_back({name, o.observed, o.limit, static_cast<long long>(o.passed ? 1 : 0)});
  }
  return t;
}

}  // namespace renyi::cli::detail
