#include "renyi/mi_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "renyi/error.hpp"
#include "renyi/specfun.hpp"

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLog2Pi = 1.8378770664093454836;
constexpr double kLogUnderflow = -745.0;

double normal_logpdf(double y, double mean, double var) {
  const double d = y - mean;
  return -0.5 * (kLog2Pi + std::log(var)) - 0.5 * d * d / var;
}

double normal_pdf(double y, double mean, double var) { return std::exp(normal_logpdf(y, mean, var)); }

double safe_exp(double x) { return x < kLogUnderflow ? 0.0 : std::exp(x); }

void check_s(double s) {
  if (!(s > -1.0) || !std::isfinite(s)) throw InvalidArgument("V_s: need s > -1");
}

bool nonnegative_law(const ScalarDistribution& d) {
  if (is_discrete(d)) {
    for (const auto& [x, w] : atoms(d)) {
      if (x < 0.0) return false;
    }
    return true;
  }
  if (std::holds_alternative<Gaussian>(d)) return false;
  const Domain dom = density_domain(d);
  return dom.kind != Domain::Kind::full_line && dom.a >= 0.0;
}

// \int_R g(y) dy as two half-lines so that |y|^s sits on a panel endpoint.
double integrate_real_line(const std::function<double(double)>& g, const NumericsConfig& cfg) {
  auto mirrored = [&g](double y) { return g(-y); };
  return integrate(g, Domain::half_line(0.0), cfg).value +
         integrate(mirrored, Domain::half_line(0.0), cfg).value;
}

struct PointStats {
  double log_f;
  double log_var;  // -inf where the conditional density does not vary
};

// Output density f(y) = E g(y|Z) and var(g(y|Z)) for the conditioning variable Z.
// Given the latent value, g is N(y; mean, var). For "within" components the
// latent value does not fix the conditioning variable, and the component adds
// E[g^2 | latent] - g_latent^2 with E[g^2 | latent] = N(y; mean, within_var) / (2 sqrt(pi) |a|).
class OutputModel {
public:
  OutputModel(const ChannelModel& ch, Conditioning cond, const NumericsConfig& cfg)
      : cfg_(cfg), a_(ch.output_scale()) {
    const auto& law = ch.law();
    const double a2 = a_ * a_;
    if (ch.kind() == ChannelModel::Kind::awgn) {
      if (cond == Conditioning::given_U) {
        throw Unsupported("awgn channels have no mixing variable U");
      }
      if (is_discrete(law)) {
        for (const auto& [x, w] : atoms(law)) comps_.push_back({w, a_ * x, a2, false, 0.0});
      } else if (const auto* g = std::get_if<Gaussian>(&law)) {
        comps_.push_back({1.0, a_ * g->mean, a2 * (1.0 + g->var), true, a2 * (g->var + 0.5)});
      } else {
        continuous_ = true;
        additive_ = true;
        within_ = false;
        latent_ = law;
        mean_of_ = [a = a_](double x) { return a * x; };
        var_of_ = [a2](double) { return a2; };
        within_var_of_ = [](double) { return 0.0; };
      }
      return;
    }
    if (!nonnegative_law(law)) throw InvalidArgument("scale mixture: U must be nonnegative");
    const bool within = cond == Conditioning::given_X;
    if (is_discrete(law)) {
      for (const auto& [u, w] : atoms(law)) {
        comps_.push_back({w, 0.0, a2 * (1.0 + u), within, a2 * (u + 0.5)});
      }
    } else {
      continuous_ = true;
      within_ = within;
      latent_ = law;
      mean_of_ = [](double) { return 0.0; };
      var_of_ = [a2](double u) { return a2 * (1.0 + u); };
      within_var_of_ = [a2](double u) { return a2 * (u + 0.5); };
    }
  }

  bool discrete_without_within() const {
    if (continuous_) return false;
    for (const auto& c : comps_) {
      if (c.within) return false;
    }
    return true;
  }

  PointStats at(double y) const { return continuous_ ? at_continuous(y) : at_discrete(y); }

  // sum_k w_k g_k (log g_k - log f): pointwise f(y) KL(P_{Z|Y=y} || P_Z).
  double kl_density(double y) const {
    std::vector<double> lg(comps_.size());
    double m = -kInf;
    for (std::size_t k = 0; k < comps_.size(); ++k) {
      lg[k] = normal_logpdf(y, comps_[k].mean, comps_[k].var);
      m = std::max(m, lg[k]);
    }
    double f = 0.0;
    for (std::size_t k = 0; k < comps_.size(); ++k) f += comps_[k].w * std::exp(lg[k] - m);
    const double lf = m + std::log(f);
    double acc = 0.0;
    for (std::size_t k = 0; k < comps_.size(); ++k) {
      acc += comps_[k].w * std::exp(lg[k] - m) * (lg[k] - lf);
    }
    return safe_exp(m) * std::max(acc, 0.0);
  }

  // E_latent log(2 pi e var) / 2 of the conditional output density.
  double conditional_entropy(Conditioning cond) const {
    const double base = 0.5 * (kLog2Pi + 1.0);
    if (cond == Conditioning::given_X) return base + std::log(std::abs(a_));
    if (!continuous_) {
      double acc = 0.0;
      for (const auto& c : comps_) acc += c.w * 0.5 * std::log(c.var);
      return base + acc;
    }
    auto integrand = [this](double u) {
      const double p = pdf(latent_, u);
      return p == 0.0 ? 0.0 : p * 0.5 * std::log(var_of_(u));
    };
    return base + integrate(integrand, density_domain(latent_), inner_cfg()).value;
  }

private:
  struct Comp {
    double w;
    double mean;
    double var;
    bool within;
    double within_var;
  };

  NumericsConfig inner_cfg() const {
    NumericsConfig c = cfg_;
    c.rel_tol = std::min(cfg_.rel_tol, 1e-11);
    c.abs_tol = 1e-300;
    return c;
  }

  PointStats at_discrete(double y) const {
    const std::size_t n = comps_.size();
    std::vector<double> plg(n);
    std::vector<double> plw(n);
    const double log_norm = std::log(2.0 * std::sqrt(std::numbers::pi) * std::abs(a_));
    double m = -kInf;
    for (std::size_t k = 0; k < n; ++k) {
      const auto& c = comps_[k];
      plg[k] = normal_logpdf(y, c.mean, c.var);
      plw[k] = -kInf;
      if (c.within) {
        const double la = normal_logpdf(y, c.mean, c.within_var) - log_norm;
        const double gap = 2.0 * plg[k] - la;
        if (gap < 0.0) plw[k] = la + std::log(-std::expm1(gap));
      }
      m = std::max(m, plg[k]);
    }
    std::vector<double> terms;
    double f = 0.0;
    double pair = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double gi = std::exp(plg[i] - m);
      f += comps_[i].w * gi;
      if (plw[i] > -kInf) terms.push_back(std::log(comps_[i].w) + plw[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d = gi - std::exp(plg[j] - m);
        pair += comps_[i].w * comps_[j].w * d * d;
      }
    }
    if (pair > 0.0) terms.push_back(2.0 * m + std::log(pair));
    double top = -kInf;
    for (double v : terms) top = std::max(top, v);
    double acc = 0.0;
    for (double v : terms) acc += std::exp(v - top);
    PointStats out;
    out.log_f = m + std::log(f);
    out.log_var = top == -kInf ? -kInf : top + std::log(acc);
    return out;
  }

  // Additive noise: with z = y/a - w the kernel is phi(w)/|a|, and phi(w)
  // underflows beyond |w| = 40.
  PointStats at_additive(double y) const {
    const Domain dom = density_domain(latent_);
    const double c = y / a_;
    double lo = -40.0;
    double hi = 40.0;
    if (dom.kind != Domain::Kind::full_line) hi = std::min(hi, c - dom.a);
    if (dom.kind == Domain::Kind::finite) lo = std::max(lo, c - dom.b);
    PointStats out{-kInf, -kInf};
    if (!(lo < hi)) return out;
    const NumericsConfig cfg = inner_cfg();
    auto over_w = [&](const std::function<double(double)>& h) {
      double total = 0.0;
      if (lo < 0.0 && hi > 0.0) {
        total += integrate(h, Domain::finite(lo, 0.0), cfg, TailCheck::disabled).value;
        total += integrate(h, Domain::finite(0.0, hi), cfg, TailCheck::disabled).value;
      } else {
        total += integrate(h, Domain::finite(lo, hi), cfg, TailCheck::disabled).value;
      }
      return total;
    };
    const double abs_a = std::abs(a_);
    const double f = over_w([&](double w) {
      const double p = pdf(latent_, c - w);
      return p == 0.0 ? 0.0 : p * normal_pdf(w, 0.0, 1.0);
    }) / abs_a;
    const double e2 = over_w([&](double w) {
      const double p = pdf(latent_, c - w);
      if (p == 0.0) return 0.0;
      const double g = normal_pdf(w, 0.0, 1.0);
      return p * g * g;
    }) / (abs_a * abs_a);
    const double var = e2 - f * f;
    out.log_f = f > 0.0 ? std::log(f) : -kInf;
    out.log_var = var > 0.0 ? std::log(var) : -kInf;
    return out;
  }

  PointStats at_continuous(double y) const {
    if (additive_) return at_additive(y);
    const Domain dom = density_domain(latent_);
    const NumericsConfig c = inner_cfg();
    auto fy = [&](double z) {
      const double p = pdf(latent_, z);
      return p == 0.0 ? 0.0 : p * normal_pdf(y, mean_of_(z), var_of_(z));
    };
    const double norm = 2.0 * std::sqrt(std::numbers::pi) * std::abs(a_);
    auto second = [&](double z) {
      const double p = pdf(latent_, z);
      if (p == 0.0) return 0.0;
      if (within_) return p * normal_pdf(y, mean_of_(z), within_var_of_(z)) / norm;
      const double g = normal_pdf(y, mean_of_(z), var_of_(z));
      return p * g * g;
    };
    const double f = integrate(fy, dom, c, TailCheck::disabled).value;
    const double e2 = integrate(second, dom, c, TailCheck::disabled).value;
    const double var = e2 - f * f;
    PointStats out;
    out.log_f = f > 0.0 ? std::log(f) : -kInf;
    out.log_var = var > 0.0 ? std::log(var) : -kInf;
    return out;
  }

  NumericsConfig cfg_;
  double a_;
  std::vector<Comp> comps_;
  bool continuous_ = false;
  bool additive_ = false;
  bool within_ = false;
  ScalarDistribution latent_ = PointMass{0.0};
  std::function<double(double)> mean_of_;
  std::function<double(double)> var_of_;
  std::function<double(double)> within_var_of_;
};

// Symmetric scale-mixture kernel (1+u1)^{s/2} (1+u2)^{s/2} / (1 + (u1+u2)/2)^{(s+1)/2}.
double mixture_kernel(double u1, double u2, double s) {
  return std::exp(0.5 * s * (std::log1p(u1) + std::log1p(u2)) -
                  0.5 * (s + 1.0) * std::log1p(0.5 * (u1 + u2)));
}

double mixture_diag(double u, double s) { return std::exp(0.5 * (s - 1.0) * std::log1p(u)); }

double mixture_given_x_extra(double u, double s) {
  return std::exp(0.5 * s * std::log1p(2.0 * u)) - mixture_diag(u, s);
}

double gamma_factor(double s) {
  return std::exp(specfun::ln_gamma(0.5 * (1.0 + s))) / (2.0 * std::numbers::pi);
}

VsValue scale_mixture_closed(const ChannelModel& ch, double s, Conditioning cond,
                             const NumericsConfig& cfg) {
  const auto& law = ch.law();
  const double scale = std::pow(std::abs(ch.output_scale()), s - 1.0);
  VsValue out;
  out.s = s;
  if (is_discrete(law)) {
    const auto xs = atoms(law);
    double acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto [ui, wi] = xs[i];
      if (cond == Conditioning::given_X) acc += wi * mixture_given_x_extra(ui, s);
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        const auto [uj, wj] = xs[j];
        acc += wi * wj *
               (mixture_diag(ui, s) + mixture_diag(uj, s) - 2.0 * mixture_kernel(ui, uj, s));
      }
    }
    out.value = scale * gamma_factor(s) * acc;
    out.method = VsValue::Method::closed_form;
    return out;
  }
  auto g = [s, cond](double u1, double u2) {
    double v = 0.5 * (mixture_diag(u1, s) + mixture_diag(u2, s)) - mixture_kernel(u1, u2, s);
    if (cond == Conditioning::given_X) {
      v += 0.5 * (mixture_given_x_extra(u1, s) + mixture_given_x_extra(u2, s));
    }
    return v;
  };
  const auto est = mc_expect_pair(law, g, cfg);
  const double factor = scale * gamma_factor(s);
  out.value = std::max(0.0, factor * est.mean);
  out.standard_error = factor * est.std_error;
  out.method = VsValue::Method::monte_carlo;
  return out;
}

}  // namespace

ChannelModel ChannelModel::awgn(ScalarDistribution input) {
  return ChannelModel(Kind::awgn, std::move(input), 1.0);
}

ChannelModel ChannelModel::scale_mixture(ScalarDistribution mixing) {
  if (!nonnegative_law(mixing)) throw InvalidArgument("scale_mixture: U must be nonnegative");
  return ChannelModel(Kind::scale_mixture, std::move(mixing), 1.0);
}

ChannelModel ChannelModel::scaled(double a) const {
  if (!(a != 0.0) || !std::isfinite(a)) throw InvalidArgument("ChannelModel::scaled: a must be nonzero");
  return ChannelModel(kind_, law_, scale_ * a);
}

double shifted_normal_abs_moment(double m, double s, const NumericsConfig& cfg) {
  check_s(s);
  if (s == 0.0) return 1.0;
  // |t|^s phi(t - m) on both sides of t = 0
  auto right = [m, s](double t) { return t == 0.0 ? 0.0 : std::pow(t, s) * normal_pdf(t, m, 1.0); };
  auto left = [m, s](double t) { return t == 0.0 ? 0.0 : std::pow(t, s) * normal_pdf(-t, m, 1.0); };
  return integrate(right, Domain::half_line(0.0), cfg, TailCheck::disabled).value +
         integrate(left, Domain::half_line(0.0), cfg, TailCheck::disabled).value;
}

double kernel_Ks(const ChannelModel& ch, double x1, double x2, double s, const NumericsConfig& cfg) {
  if (ch.kind() != ChannelModel::Kind::awgn) {
    throw Unsupported("kernel_Ks: defined for awgn channels");
  }
  check_s(s);
  const double m = (x1 + x2) / std::numbers::sqrt2;
  const double d = (x1 - x2) / std::numbers::sqrt2;
  const double phi_d = normal_pdf(d, 0.0, 1.0);
  if (phi_d == 0.0) return 0.0;
  const double k = std::exp(-0.5 * (1.0 + s) * std::numbers::ln2) *
                   shifted_normal_abs_moment(m, s, cfg) * phi_d;
  return std::pow(std::abs(ch.output_scale()), s - 1.0) * k;
}

const char* to_string(VsValue::Method m) {
  switch (m) {
    case VsValue::Method::closed_form:
      return "closed_form";
    case VsValue::Method::quadrature:
      return "quadrature";
    case VsValue::Method::monte_carlo:
    default:
      return "monte_carlo";
  }
}

McEstimate expected_gaussian_similarity(const ScalarDistribution& d, const NumericsConfig& cfg) {
  McEstimate out;
  if (is_discrete(d)) {
    const auto xs = atoms(d);
    double acc = 0.0;
    for (const auto& [xi, wi] : xs) {
      for (const auto& [xj, wj] : xs) acc += wi * wj * std::exp(-0.25 * (xi - xj) * (xi - xj));
    }
    out.mean = acc;
    return out;
  }
  if (const auto* g = std::get_if<Gaussian>(&d)) {
    out.mean = 1.0 / std::sqrt(1.0 + g->var);
    return out;
  }
  return mc_expect_pair(
      d, [](double x1, double x2) { return std::exp(-0.25 * (x1 - x2) * (x1 - x2)); }, cfg);
}

VsValue V_s_direct(const ChannelModel& ch, double s, Conditioning cond, const NumericsConfig& cfg) {
  check_s(s);
  const OutputModel model(ch, cond, cfg);
  auto integrand = [&](double y) {
    const auto st = model.at(y);
    if (st.log_var == -kInf) return 0.0;
    const double ly = s == 0.0 ? 0.0 : s * std::log(std::abs(y));
    return safe_exp(ly + st.log_var);
  };
  VsValue out;
  out.s = s;
  out.value = integrate_real_line(integrand, cfg);
  out.method = VsValue::Method::quadrature;
  return out;
}

VsValue V_s_kernel(const ChannelModel& ch, double s, Conditioning cond, const NumericsConfig& cfg) {
  check_s(s);
  VsValue out;
  out.s = s;
  const auto& law = ch.law();
  if (ch.kind() == ChannelModel::Kind::awgn) {
    if (cond == Conditioning::given_U) throw Unsupported("awgn channels have no mixing variable U");
    if (is_discrete(law)) {
      const auto xs = atoms(law);
      double acc = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          const double xi = xs[i].first;
          const double xj = xs[j].first;
          acc += xs[i].second * xs[j].second *
                 (kernel_Ks(ch, xi, xi, s, cfg) + kernel_Ks(ch, xj, xj, s, cfg) -
                  2.0 * kernel_Ks(ch, xi, xj, s, cfg));
        }
      }
      out.value = acc;
      out.method = s == 0.0 ? VsValue::Method::closed_form : VsValue::Method::quadrature;
      return out;
    }
    auto g = [&](double x1, double x2) {
      return 0.5 * (kernel_Ks(ch, x1, x1, s, cfg) + kernel_Ks(ch, x2, x2, s, cfg)) -
             kernel_Ks(ch, x1, x2, s, cfg);
    };
    const auto est = mc_expect_pair(law, g, cfg);
    out.value = std::max(0.0, est.mean);
    out.standard_error = est.std_error;
    out.method = VsValue::Method::monte_carlo;
    return out;
  }
  // X = A sqrt(U); kernels are those of the awgn channel with the same output scale.
  const ChannelModel inner = ChannelModel::awgn(PointMass{0.0}).scaled(ch.output_scale());
  auto draw = [&](CounterRng& rng) {
    const double u1 = sample(law, rng);
    const double u2 = sample(law, rng);
    const double r1 = std::sqrt(u1);
    const double r2 = std::sqrt(u2);
    const double a1 = rng.normal();
    const double a2 = rng.normal();
    const double a3 = rng.normal();
    const double a4 = rng.normal();
    if (cond == Conditioning::given_X) {
      const double x1 = a1 * r1;
      const double x2 = a2 * r2;
      return 0.5 * (kernel_Ks(inner, x1, x1, s, cfg) + kernel_Ks(inner, x2, x2, s, cfg)) -
             kernel_Ks(inner, x1, x2, s, cfg);
    }
    return 0.5 * (kernel_Ks(inner, a1 * r1, a2 * r1, s, cfg) +
                  kernel_Ks(inner, a3 * r2, a4 * r2, s, cfg)) -
           kernel_Ks(inner, a1 * r1, a4 * r2, s, cfg);
  };
  const auto est = mc_expect(draw, cfg);
  out.value = std::max(0.0, est.mean);
  out.standard_error = est.std_error;
  out.method = VsValue::Method::monte_carlo;
  return out;
}

VsValue V_s(const ChannelModel& ch, double s, Conditioning cond, const NumericsConfig& cfg) {
  check_s(s);
  if (ch.kind() == ChannelModel::Kind::scale_mixture) return scale_mixture_closed(ch, s, cond, cfg);
  if (cond == Conditioning::given_U) throw Unsupported("awgn channels have no mixing variable U");

  const auto& law = ch.law();
  const double scale = std::pow(std::abs(ch.output_scale()), s - 1.0);
  VsValue out;
  out.s = s;
  if (const auto* g = std::get_if<Gaussian>(&law)) {
    if (g->mean == 0.0) {
      // N(0, v) input is the scale mixture with U = v.
      out.value = scale * gamma_factor(s) * mixture_given_x_extra(g->var, s);
      return out;
    }
    if (s == 0.0) {
      out.value = scale * (-std::expm1(-0.5 * std::log1p(g->var))) /
                  (2.0 * std::sqrt(std::numbers::pi));
      return out;
    }
    return V_s_direct(ch, s, cond, cfg);
  }
  if (is_discrete(law)) {
    if (s == 0.0) {
      const auto xs = atoms(law);
      double acc = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          const double d = xs[i].first - xs[j].first;
          acc += 2.0 * xs[i].second * xs[j].second * (-std::expm1(-0.25 * d * d));
        }
      }
      out.value = scale * acc / (2.0 * std::sqrt(std::numbers::pi));
      return out;
    }
    return V_s_kernel(ch, s, cond, cfg);
  }
  if (s == 0.0) {
    const auto est = expected_gaussian_similarity(law, cfg);
    const double factor = scale / (2.0 * std::sqrt(std::numbers::pi));
    out.value = std::max(0.0, factor * (1.0 - est.mean));
    out.standard_error = factor * est.std_error;
    out.method = VsValue::Method::monte_carlo;
    return out;
  }
  return V_s_direct(ch, s, cond, cfg);
}

double marginal_mass(const ChannelModel& ch, const NumericsConfig& cfg) {
  const Conditioning cond = ch.kind() == ChannelModel::Kind::awgn ? Conditioning::given_X
                                                                   : Conditioning::given_U;
  const OutputModel model(ch, cond, cfg);
  return integrate_real_line([&](double y) { return safe_exp(model.at(y).log_f); }, cfg);
}

double chi_square(const ChannelModel& ch, Conditioning cond, const NumericsConfig& cfg) {
  const OutputModel model(ch, cond, cfg);
  auto integrand = [&](double y) {
    const auto st = model.at(y);
    if (st.log_var == -kInf || st.log_f == -kInf) return 0.0;
    return safe_exp(st.log_var - st.log_f);
  };
  return integrate_real_line(integrand, cfg);
}

double chi2_mi_bound(const ChannelModel& ch, Conditioning cond, const NumericsConfig& cfg) {
  return std::log1p(chi_square(ch, cond, cfg));
}

double prop7_bound(const ChannelModel& ch, double t, Conditioning cond, const NumericsConfig& cfg) {
  if (!(t > 0.0 && t <= 1.0)) throw InvalidArgument("prop7_bound: t must lie in (0, 1]");
  const OutputModel model(ch, cond, cfg);
  auto integrand = [&](double y) {
    const auto st = model.at(y);
    if (st.log_var == -kInf || st.log_f == -kInf) return 0.0;
    return safe_exp((1.0 - 2.0 * t) * st.log_f + t * st.log_var);
  };
  const double integral = integrate_real_line(integrand, cfg);
  return integral == 0.0 ? 0.0 : specfun::kappa(t) * integral;
}

double output_renyi_entropy(const ChannelModel& ch, double r, const NumericsConfig& cfg) {
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("output_renyi_entropy: r must lie in (0, 1)");
  const Conditioning cond = ch.kind() == ChannelModel::Kind::awgn ? Conditioning::given_X
                                                                   : Conditioning::given_U;
  const OutputModel model(ch, cond, cfg);
  const double integral =
      integrate_real_line([&](double y) { return safe_exp(r * model.at(y).log_f); }, cfg);
  return std::log(integral) / (1.0 - r);
}

double prop8_bound(const ChannelModel& ch, double r, Conditioning cond, const NumericsConfig& cfg) {
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("prop8_bound: r must lie in (0, 1)");
  const double v0 = V_s(ch, 0.0, cond, cfg).value;
  if (v0 == 0.0) return 0.0;
  const double t = (1.0 - r) / (2.0 - r);
  const double h = output_renyi_entropy(ch, r, cfg);
  return specfun::kappa(t) * std::exp(t * (h + std::log(v0)));
}

double prop9_constant(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw InvalidArgument("prop9_constant: lambda in (0, 1)");
  const double log_inner = std::log(std::numbers::pi) - lambda * std::log(lambda) -
                           (1.0 - lambda) * std::log1p(-lambda) -
                           std::log(std::sin(std::numbers::pi * lambda));
  return specfun::kappa(0.5) * std::exp(0.5 * log_inner);
}

double prop9_bound(const ChannelModel& ch, double p, double q, Conditioning cond,
                   const NumericsConfig& cfg) {
  if (!(p < 1.0 && 1.0 < q) || !std::isfinite(p) || !std::isfinite(q)) {
    throw InvalidMomentOrder("prop9_bound: need p < 1 < q");
  }
  const double lambda = (q - 1.0) / (q - p);
  const double vp = V_s(ch, p, cond, cfg).value;
  const double vq = V_s(ch, q, cond, cfg).value;
  if (vp == 0.0 || vq == 0.0) return 0.0;
  const double omega_real_line = 2.0;
  const double log_inner = std::log(omega_real_line) + lambda * std::log(vp) +
                           (1.0 - lambda) * std::log(vq) - std::log(q - p);
  return prop9_constant(lambda) * std::exp(0.5 * log_inner);
}

double mi_oracle(const ChannelModel& ch, Conditioning cond, const NumericsConfig& cfg) {
  const OutputModel model(ch, cond, cfg);
  if (model.discrete_without_within()) {
    return integrate_real_line([&](double y) { return model.kl_density(y); }, cfg);
  }
  auto neg_f_log_f = [&](double y) {
    const double lf = model.at(y).log_f;
    return lf == -kInf ? 0.0 : -safe_exp(lf) * lf;
  };
  const double h_y = integrate_real_line(neg_f_log_f, cfg);
  return std::max(0.0, h_y - model.conditional_entropy(cond));
}

double vs_upper_bound_check(const ChannelModel& ch, double s, const NumericsConfig& cfg) {
  check_s(s);
  if (ch.kind() != ChannelModel::Kind::scale_mixture || !is_discrete(ch.law())) {
    throw Unsupported("vs_upper_bound_check: needs a scale mixture with discrete U");
  }
  const auto xs = atoms(ch.law());
  double collide = 0.0;
  double moment = 0.0;
  for (const auto& [u, w] : xs) {
    collide += w * w;
    moment += w * mixture_diag(u, s);
  }
  const double scale = std::pow(std::abs(ch.output_scale()), s - 1.0);
  const double bound = scale * gamma_factor(s) * (1.0 - collide) * moment;
  return bound - V_s(ch, s, Conditioning::given_U, cfg).value;
}

}  // namespace renyi
