#include "renyi/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "renyi/error.hpp"
#include "renyi/parallel.hpp"

namespace renyi {

Domain Domain::finite(double a, double b) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("Domain::finite requires finite a < b");
  }
  return Domain{Kind::finite, a, b};
}

Domain Domain::half_line(double a) {
  if (!std::isfinite(a)) throw InvalidArgument("Domain::half_line requires finite a");
  return Domain{Kind::half_line, a, std::numeric_limits<double>::infinity()};
}

Domain Domain::full_line() {
  return Domain{Kind::full_line, -std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity()};
}

void NumericsConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw InvalidArgument("NumericsConfig: tolerances must be positive");
  }
  if (max_subdivisions < 1) throw InvalidArgument("NumericsConfig: max_subdivisions < 1");
  if (mc_samples < 1000) throw InvalidArgument("NumericsConfig: mc_samples must be >= 1000");
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// QUADPACK qk15 abscissae and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class G>
Panel gauss_kronrod_15(const G& g, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  const double fc = g(center);
  double res_g = fc * kWg[3];
  double res_k = fc * kWgk[7];
  double res_abs = std::abs(res_k);
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double dx = half * kXgk[jtw];
    f1[jtw] = g(center - dx);
    f2[jtw] = g(center + dx);
    const double sum = f1[jtw] + f2[jtw];
    res_g += kWg[j] * sum;
    res_k += kWgk[jtw] * sum;
    res_abs += kWgk[jtw] * (std::abs(f1[jtw]) + std::abs(f2[jtw]));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double dx = half * kXgk[jtwm1];
    f1[jtwm1] = g(center - dx);
    f2[jtwm1] = g(center + dx);
    res_k += kWgk[jtwm1] * (f1[jtwm1] + f2[jtwm1]);
    res_abs += kWgk[jtwm1] * (std::abs(f1[jtwm1]) + std::abs(f2[jtwm1]));
  }
  const double res_kh = 0.5 * res_k;
  double res_asc = kWgk[7] * std::abs(fc - res_kh);
  for (int j = 0; j < 7; ++j) {
    res_asc += kWgk[j] * (std::abs(f1[j] - res_kh) + std::abs(f2[j] - res_kh));
  }
  const double abs_half = std::abs(half);
  res_abs *= abs_half;
  res_asc *= abs_half;
  double err = std::abs((res_k - res_g) * half);
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  if (res_abs > kTiny / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * res_abs, err);
  }
  return Panel{lo, hi, res_k * half, err};
}

// Integrand pulled back to the unit interval (or (-1, 1) for the full line).
struct Mapped {
  const std::function<double(double)>* f;
  Domain domain;

  double operator()(double u) const {
    double x;
    double jac;
    switch (domain.kind) {
      case Domain::Kind::finite:
        x = u;
        jac = 1.0;
        break;
      case Domain::Kind::half_line: {
        const double w = 1.0 - u;
        x = domain.a + u / w;
        jac = 1.0 / (w * w);
        break;
      }
      case Domain::Kind::full_line:
      default: {
        const double w = 1.0 - u * u;
        x = u / w;
        jac = (1.0 + u * u) / (w * w);
        break;
      }
    }
    if (!std::isfinite(x) || !std::isfinite(jac)) return 0.0;
    const double fx = (*f)(x);
    if (std::isnan(fx)) {
      throw DomainError("integrate: integrand returned NaN at x = " + std::to_string(x));
    }
    const double v = fx * jac;
    if (std::isinf(v)) {
      throw DomainError("integrate: integrand is infinite at x = " + std::to_string(x));
    }
    return v;
  }
};

// Mass of |f| on [lo, hi] (0 < lo < hi) with x = lo * exp(s).
double log_panel_mass(const std::function<double(double)>& f, double lo, double hi) {
  const double span = std::log(hi / lo);
  auto g = [&](double s) {
    const double x = lo * std::exp(s);
    const double v = std::abs(f(x)) * x;
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };
  double total = 0.0;
  for (int k = 0; k < 2; ++k) {
    const double a = span * k / 2.0;
    const double b = span * (k + 1) / 2.0;
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = kWgk[7] * g(center);
    for (int j = 0; j < 7; ++j) {
      const double dx = half * kXgk[j];
      sum += kWgk[j] * (g(center - dx) + g(center + dx));
    }
    total += sum * half;
  }
  return total;
}

constexpr int kTailFirst = 4;
constexpr int kTailLast = 64;
constexpr double kTailRatio = 1.0 - 1e-6;

bool not_decaying(double prev, double next) {
  if (std::isinf(next)) return true;
  if (next == 0.0) return false;
  if (prev == 0.0) return true;
  return next / prev >= kTailRatio;
}

// side = +1 for x -> +inf from anchor, -1 for x -> -inf from anchor.
bool infinite_tail_diverges(const std::function<double(double)>& f, double anchor, int side) {
  auto g = [&](double x) { return f(anchor + side * x); };
  const std::function<double(double)> gf = g;
  int streak = 0;
  double prev = log_panel_mass(gf, std::ldexp(1.0, kTailFirst), std::ldexp(1.0, kTailFirst + 1));
  for (int j = kTailFirst + 1; j <= kTailLast; ++j) {
    const double next = log_panel_mass(gf, std::ldexp(1.0, j), std::ldexp(1.0, j + 1));
    streak = not_decaying(prev, next) ? streak + 1 : 0;
    prev = next;
  }
  return streak >= 3;
}

// Masses on [anchor + T/2, anchor + T] as T halves toward the endpoint.
bool endpoint_diverges(const std::function<double(double)>& f, double anchor) {
  auto g = [&](double x) { return f(anchor + x); };
  const std::function<double(double)> gf = g;
  int streak = 0;
  double prev =
      log_panel_mass(gf, std::ldexp(1.0, -kTailFirst - 1), std::ldexp(1.0, -kTailFirst));
  for (int j = kTailFirst + 1; j <= kTailLast; ++j) {
    const double next = log_panel_mass(gf, std::ldexp(1.0, -j - 1), std::ldexp(1.0, -j));
    streak = not_decaying(prev, next) ? streak + 1 : 0;
    prev = next;
  }
  return streak >= 3;
}

}  // namespace

bool tail_diverges(const std::function<double(double)>& f, const Domain& domain) {
  switch (domain.kind) {
    case Domain::Kind::finite:
      return false;
    case Domain::Kind::half_line:
      return infinite_tail_diverges(f, domain.a, +1) || endpoint_diverges(f, domain.a);
    case Domain::Kind::full_line:
    default:
      return infinite_tail_diverges(f, 0.0, +1) || infinite_tail_diverges(f, 0.0, -1);
  }
}

QuadResult integrate(const std::function<double(double)>& f, const Domain& domain,
                     const NumericsConfig& cfg, TailCheck check) {
  if (check == TailCheck::enabled && tail_diverges(f, domain)) {
    throw DivergenceDetected("integrate: tail contribution does not decay under refinement");
  }

  const Mapped g{&f, domain};
  double lo;
  double hi;
  int initial;
  switch (domain.kind) {
    case Domain::Kind::finite:
      lo = domain.a;
      hi = domain.b;
      initial = 2;
      break;
    case Domain::Kind::half_line:
      lo = 0.0;
      hi = 1.0;
      initial = 4;
      break;
    case Domain::Kind::full_line:
    default:
      lo = -1.0;
      hi = 1.0;
      initial = 8;
      break;
  }

  std::priority_queue<Panel> open;
  std::vector<Panel> settled;  // too narrow to bisect further
  double total = 0.0;
  double total_err = 0.0;
  for (int i = 0; i < initial; ++i) {
    const double a = lo + (hi - lo) * i / initial;
    const double b = lo + (hi - lo) * (i + 1) / initial;
    Panel p = gauss_kronrod_15(g, a, b);
    total += p.value;
    total_err += p.error;
    open.push(p);
  }

  int panels = initial;
  auto converged = [&] { return total_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)); };
  while (!converged() && !open.empty()) {
    if (panels >= cfg.max_subdivisions) {
      throw MaxSubdivisions("integrate: tolerance not reached within " +
                                std::to_string(cfg.max_subdivisions) + " panels (error " +
                                std::to_string(total_err) + ")",
                            total, total_err);
    }
    Panel worst = open.top();
    open.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi) ||
        (worst.hi - worst.lo) <= 1e3 * kEps * std::max(std::abs(mid), kTiny)) {
      settled.push_back(worst);
      continue;
    }
    const Panel left = gauss_kronrod_15(g, worst.lo, mid);
    const Panel right = gauss_kronrod_15(g, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    open.push(left);
    open.push(right);
    ++panels;
  }

  // Recompute from the panel list to shed accumulated rounding in the running sums.
  double value = 0.0;
  double error = 0.0;
  for (const auto& p : settled) {
    value += p.value;
    error += p.error;
  }
  while (!open.empty()) {
    value += open.top().value;
    error += open.top().error;
    open.pop();
  }
  if (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value)) &&
      error > 1e3 * kEps * std::abs(value)) {
    throw MaxSubdivisions("integrate: panels exhausted at machine resolution before tolerance",
                          value, error);
  }
  return QuadResult{value, error, panels};
}

QuadResult integrate_2d(const std::function<double(double, double)>& f, const Domain& x_domain,
                        const Domain& y_domain, const NumericsConfig& cfg) {
  double inner_err = 0.0;
  auto outer = [&](double x) {
    const auto inner = integrate([&](double y) { return f(x, y); }, y_domain, cfg);
    inner_err = std::max(inner_err, inner.error);
    return inner.value;
  };
  auto res = integrate(outer, x_domain, cfg);
  res.error += inner_err;
  return res;
}

McEstimate mc_expect(const std::function<double(CounterRng&)>& draw, const NumericsConfig& cfg) {
  cfg.validate();
  constexpr std::int64_t kBlock = 4096;
  const std::int64_t n = cfg.mc_samples;
  const auto blocks = static_cast<std::size_t>((n + kBlock - 1) / kBlock);

  struct Moments {
    std::int64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;
  };
  std::vector<Moments> partial(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    CounterRng rng(cfg.rng_seed, b);
    const std::int64_t begin = static_cast<std::int64_t>(b) * kBlock;
    const std::int64_t end = std::min(n, begin + kBlock);
    Moments m;
    for (std::int64_t i = begin; i < end; ++i) {
      const double x = draw(rng);
      ++m.count;
      const double delta = x - m.mean;
      m.mean += delta / static_cast<double>(m.count);
      m.m2 += delta * (x - m.mean);
    }
    partial[b] = m;
  });

  Moments acc;
  for (const auto& m : partial) {
    if (m.count == 0) continue;
    const auto total = acc.count + m.count;
    const double delta = m.mean - acc.mean;
    acc.mean += delta * static_cast<double>(m.count) / static_cast<double>(total);
    acc.m2 += m.m2 + delta * delta * static_cast<double>(acc.count) *
                         static_cast<double>(m.count) / static_cast<double>(total);
    acc.count = total;
  }
  McEstimate est;
  est.mean = acc.mean;
  est.samples = acc.count;
  est.std_error = acc.count > 1
                      ? std::sqrt(acc.m2 / static_cast<double>(acc.count - 1) /
                                  static_cast<double>(acc.count))
                      : 0.0;
  return est;
}

}  // namespace renyi
