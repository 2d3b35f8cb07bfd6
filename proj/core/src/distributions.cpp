#include "renyi/distributions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "renyi/error.hpp"
#include "renyi/specfun.hpp"

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLog2Pi = 1.8378770664093454836;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double log_add(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

double normal_logpdf(double x, double mean, double var) {
  const double d = x - mean;
  return -0.5 * (kLog2Pi + std::log(var)) - 0.5 * d * d / var;
}

// h_r of N(0, 1) per coordinate: (1/2) log(2 pi r^{1/(r-1)}).
double gaussian_renyi_unit(double r) { return 0.5 * (kLog2Pi + std::log(r) / (r - 1.0)); }

void check_order(double r) {
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("Renyi order must lie in (0, 1)");
}

// \int_domain g(x) f(x) dx, split at 0 when 0 is interior so that |x|^s and
// log|x| singularities sit on panel endpoints.
double expect_density(const std::function<double(double)>& f, const Domain& dom,
                      const std::function<double(double)>& g, const NumericsConfig& cfg) {
  auto h = [&](double x) {
    const double fx = f(x);
    return fx == 0.0 ? 0.0 : g(x) * fx;
  };
  switch (dom.kind) {
    case Domain::Kind::full_line: {
      auto mirrored = [&](double x) { return h(-x); };
      return integrate(h, Domain::half_line(0.0), cfg).value +
             integrate(mirrored, Domain::half_line(0.0), cfg).value;
    }
    case Domain::Kind::half_line:
      if (dom.a < 0.0) {
        return integrate(h, Domain::finite(dom.a, 0.0), cfg).value +
               integrate(h, Domain::half_line(0.0), cfg).value;
      }
      return integrate(h, dom, cfg).value;
    case Domain::Kind::finite:
    default:
      if (dom.a < 0.0 && dom.b > 0.0) {
        return integrate(h, Domain::finite(dom.a, 0.0), cfg).value +
               integrate(h, Domain::finite(0.0, dom.b), cfg).value;
      }
      return integrate(h, dom, cfg).value;
  }
}

double generic_moment(const GenericPdf& g, double s, const NumericsConfig& cfg) {
  try {
    const double m = expect_density(*g.pdf, g.domain,
                                    [s](double x) { return std::pow(std::abs(x), s); }, cfg);
    return std::isfinite(m) ? std::log(m) : kInf;
  } catch (const DivergenceDetected&) {
    return kInf;
  } catch (const MaxSubdivisions&) {
    // Non-integrable endpoint singularity on a finite panel.
    if (s < 0.0) return kInf;
    throw;
  }
}

}  // namespace

namespace dist {

ScalarDistribution lognormal(double mu, double sigma2) {
  if (!std::isfinite(mu) || !(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw InvalidArgument("lognormal: need finite mu and sigma2 > 0");
  }
  return LogNormal{mu, sigma2};
}

ScalarDistribution gaussian_magnitude(int n) {
  if (n < 1) throw InvalidArgument("gaussian_magnitude: n must be >= 1");
  return GaussianMagnitude{n};
}

ScalarDistribution two_point(double eps, double a) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("two_point: eps must lie in (0, 1)");
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument("two_point: a must be positive");
  return TwoPoint{eps, a};
}

ScalarDistribution point_mass(double c) {
  if (!std::isfinite(c)) throw InvalidArgument("point_mass: c must be finite");
  return PointMass{c};
}

ScalarDistribution gaussian(double mean, double var) {
  if (!std::isfinite(mean) || !(var > 0.0) || !std::isfinite(var)) {
    throw InvalidArgument("gaussian: need finite mean and var > 0");
  }
  return Gaussian{mean, var};
}

ScalarDistribution generic_pdf(std::function<double(double)> pdf, const Domain& domain,
                               const NumericsConfig& cfg) {
  if (!pdf) throw InvalidArgument("generic_pdf: empty density");
  GenericPdf g{std::make_shared<const std::function<double(double)>>(std::move(pdf)), domain};
  const double mass = integrate(*g.pdf, domain, cfg).value;
  if (!(std::abs(mass - 1.0) <= 1e-6)) {
    throw InvalidArgument("generic_pdf: density integrates to " + std::to_string(mass));
  }
  return g;
}

}  // namespace dist

bool is_discrete(const ScalarDistribution& d) {
  return std::holds_alternative<TwoPoint>(d) || std::holds_alternative<PointMass>(d);
}

int dimension(const ScalarDistribution& d) {
  if (const auto* g = std::get_if<GaussianMagnitude>(&d)) return g->n;
  return 1;
}

Support natural_support(const ScalarDistribution& d) {
  return std::visit(
      Overloaded{
          [](const GaussianMagnitude& g) { return Support::euclidean(g.n); },
          [](const Gaussian&) { return Support::real_line(); },
          [](const PointMass& p) {
            return p.c >= 0.0 ? Support::positive_half_line() : Support::real_line();
          },
          [](const GenericPdf& g) {
            const bool nonneg = g.domain.kind != Domain::Kind::full_line && g.domain.a >= 0.0;
            return nonneg ? Support::positive_half_line() : Support::real_line();
          },
          [](const auto&) { return Support::positive_half_line(); },
      },
      d);
}

double log_moment(const ScalarDistribution& d, double s, const NumericsConfig& cfg) {
  if (!std::isfinite(s)) throw InvalidArgument("log_moment: exponent must be finite");
  return std::visit(
      Overloaded{
          [s](const LogNormal& l) { return l.mu * s + 0.5 * l.sigma2 * s * s; },
          [s](const GaussianMagnitude& g) {
            if (!(s > -g.n)) return kInf;
            return 0.5 * s * std::numbers::ln2 + specfun::ln_gamma(0.5 * (g.n + s)) -
                   specfun::ln_gamma(0.5 * g.n);
          },
          [s](const TwoPoint& t) {
            return log_add(std::log1p(-t.eps), std::log(t.eps) + s * std::log(t.a));
          },
          [s](const PointMass& p) {
            if (p.c != 0.0) return s * std::log(std::abs(p.c));
            if (s > 0.0) return -kInf;
            return s == 0.0 ? 0.0 : kInf;
          },
          [s, &cfg](const Gaussian& g) {
            if (!(s > -1.0)) return kInf;
            if (g.mean == 0.0) {
              return 0.5 * s * std::log(2.0 * g.var) + specfun::ln_gamma(0.5 * (1.0 + s)) -
                     0.5 * std::log(std::numbers::pi);
            }
            auto f = [&g](double x) { return std::exp(normal_logpdf(x, g.mean, g.var)); };
            GenericPdf tmp{std::make_shared<const std::function<double(double)>>(f),
                           Domain::full_line()};
            return generic_moment(tmp, s, cfg);
          },
          [s, &cfg](const GenericPdf& g) { return generic_moment(g, s, cfg); },
      },
      d);
}

double renyi_entropy(const ScalarDistribution& d, double r, const NumericsConfig& cfg) {
  check_order(r);
  return std::visit(
      Overloaded{
          [r](const LogNormal& l) {
            return l.mu + 0.5 * ((1.0 - r) / r) * l.sigma2 + gaussian_renyi_unit(r) +
                   0.5 * std::log(l.sigma2);
          },
          [r](const GaussianMagnitude& g) { return g.n * gaussian_renyi_unit(r); },
          [r](const Gaussian& g) { return gaussian_renyi_unit(r) + 0.5 * std::log(g.var); },
          [r, &cfg](const GenericPdf& g) {
            auto fr = [&g, r](double x) {
              const double fx = (*g.pdf)(x);
              return fx > 0.0 ? std::pow(fx, r) : 0.0;
            };
            const double integral = integrate(fr, g.domain, cfg).value;
            return std::log(integral) / (1.0 - r);
          },
          [](const auto&) -> double {
            throw Unsupported("renyi_entropy: discrete law has no density");
          },
      },
      d);
}

double shannon_entropy(const ScalarDistribution& d, const NumericsConfig& cfg) {
  constexpr double kLog2PiE = 2.8378770664093454836;
  return std::visit(
      Overloaded{
          [](const LogNormal& l) { return l.mu + 0.5 * (kLog2PiE + std::log(l.sigma2)); },
          [](const GaussianMagnitude& g) { return 0.5 * g.n * kLog2PiE; },
          [](const Gaussian& g) { return 0.5 * (kLog2PiE + std::log(g.var)); },
          [&cfg](const GenericPdf& g) {
            auto integrand = [&g](double x) {
              const double fx = (*g.pdf)(x);
              return fx > 0.0 ? -fx * std::log(fx) : 0.0;
            };
            return integrate(integrand, g.domain, cfg).value;
          },
          [](const auto&) -> double {
            throw Unsupported("shannon_entropy: discrete law has no density");
          },
      },
      d);
}

LogMeanVar log_mean_var(const ScalarDistribution& d, const NumericsConfig& cfg) {
  auto numeric = [&cfg](const std::function<double(double)>& f, const Domain& dom) {
    auto lg = [](double x) { return std::log(std::abs(x)); };
    const double m = expect_density(f, dom, lg, cfg);
    const double v = expect_density(
        f, dom,
        [m](double x) {
          const double t = std::log(std::abs(x)) - m;
          return t * t;
        },
        cfg);
    return LogMeanVar{m, v};
  };
  return std::visit(
      Overloaded{
          [](const LogNormal& l) { return LogMeanVar{l.mu, l.sigma2}; },
          [](const GaussianMagnitude& g) {
            const double h = 0.5 * g.n;
            return LogMeanVar{0.5 * (specfun::digamma(h) + std::numbers::ln2),
                              0.25 * specfun::trigamma(h)};
          },
          [&numeric](const Gaussian& g) {
            if (g.mean == 0.0) {
              return LogMeanVar{0.5 * (specfun::digamma(0.5) + std::log(2.0 * g.var)),
                                0.25 * specfun::trigamma(0.5)};
            }
            auto f = [g](double x) { return std::exp(normal_logpdf(x, g.mean, g.var)); };
            return numeric(f, Domain::full_line());
          },
          [](const TwoPoint& t) {
            const double la = std::log(t.a);
            return LogMeanVar{t.eps * la, t.eps * (1.0 - t.eps) * la * la};
          },
          [](const PointMass& p) {
            if (p.c == 0.0) throw MomentDiverges("log_mean_var: point mass at zero");
            return LogMeanVar{std::log(std::abs(p.c)), 0.0};
          },
          [&numeric](const GenericPdf& g) { return numeric(*g.pdf, g.domain); },
      },
      d);
}

double L_r(const ScalarDistribution& d, const TwoMomentParams& params, int n,
           const NumericsConfig& cfg) {
  if (n < 1) throw InvalidArgument("L_r: n must be >= 1");
  const double c = params.r() / (1.0 - params.r());
  const double lp = log_moment(d, n * params.p(), cfg);
  const double lq = log_moment(d, n * params.q(), cfg);
  if (lp == kInf || lq == kInf) {
    throw MomentDiverges("L_r: log-moment of order " + std::to_string(lp == kInf ? params.p() : params.q()) +
                         " is infinite");
  }
  const double value = c * params.lambda() * lp + c * (1.0 - params.lambda()) * lq;
  if (std::isnan(value)) throw InvalidArgument("L_r: undefined for this law");
  return value;
}

double L_r(const ScalarDistribution& d, double r, double p, double q, const NumericsConfig& cfg) {
  return L_r(d, TwoMomentParams::make(r, p, q), 1, cfg);
}

double sample(const ScalarDistribution& d, CounterRng& rng) {
  return std::visit(
      Overloaded{
          [&rng](const LogNormal& l) { return std::exp(l.mu + std::sqrt(l.sigma2) * rng.normal()); },
          [&rng](const GaussianMagnitude& g) {
            double acc = 0.0;
            for (int i = 0; i < g.n; ++i) {
              const double z = rng.normal();
              acc += z * z;
            }
            return std::sqrt(acc);
          },
          [&rng](const TwoPoint& t) { return rng.uniform() < t.eps ? t.a : 1.0; },
          [](const PointMass& p) { return p.c; },
          [&rng](const Gaussian& g) { return g.mean + std::sqrt(g.var) * rng.normal(); },
          [](const GenericPdf&) -> double {
            throw Unsupported("sample: generic densities have no sampler");
          },
      },
      d);
}

double pdf(const ScalarDistribution& d, double x) {
  return std::visit(
      Overloaded{
          [x](const LogNormal& l) {
            if (!(x > 0.0)) return 0.0;
            const double lx = std::log(x);
            return std::exp(normal_logpdf(lx, l.mu, l.sigma2) - lx);
          },
          [x](const GaussianMagnitude& g) {
            if (!(x > 0.0)) return 0.0;
            const double h = 0.5 * g.n;
            return std::exp((g.n - 1) * std::log(x) - 0.5 * x * x - (h - 1.0) * std::numbers::ln2 -
                            specfun::ln_gamma(h));
          },
          [x](const Gaussian& g) { return std::exp(normal_logpdf(x, g.mean, g.var)); },
          [x](const GenericPdf& g) {
            const auto& dom = g.domain;
            if (dom.kind != Domain::Kind::full_line && x < dom.a) return 0.0;
            if (dom.kind == Domain::Kind::finite && x > dom.b) return 0.0;
            return (*g.pdf)(x);
          },
          [](const auto&) -> double { throw Unsupported("pdf: discrete law has no density"); },
      },
      d);
}

std::vector<std::pair<double, double>> atoms(const ScalarDistribution& d) {
  if (const auto* t = std::get_if<TwoPoint>(&d)) return {{1.0, 1.0 - t->eps}, {t->a, t->eps}};
  if (const auto* p = std::get_if<PointMass>(&d)) return {{p->c, 1.0}};
  return {};
}

Domain density_domain(const ScalarDistribution& d) {
  return std::visit(
      Overloaded{
          [](const Gaussian&) { return Domain::full_line(); },
          [](const GenericPdf& g) { return g.domain; },
          [](const LogNormal&) { return Domain::half_line(0.0); },
          [](const GaussianMagnitude&) { return Domain::half_line(0.0); },
          [](const auto&) -> Domain { throw Unsupported("density_domain: discrete law"); },
      },
      d);
}

McEstimate mc_expect(const ScalarDistribution& d, const std::function<double(double)>& g,
                     const NumericsConfig& cfg) {
  return mc_expect([&](CounterRng& rng) { return g(sample(d, rng)); }, cfg);
}

McEstimate mc_expect_pair(const ScalarDistribution& d,
                          const std::function<double(double, double)>& g,
                          const NumericsConfig& cfg) {
  return mc_expect(
      [&](CounterRng& rng) {
        const double x1 = sample(d, rng);
        const double x2 = sample(d, rng);
        return g(x1, x2);
      },
      cfg);
}

}  // namespace renyi
