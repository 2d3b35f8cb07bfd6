#include "renyi/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "renyi/error.hpp"

namespace renyi::specfun {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2k} / (2k (2k - 1)), k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,    -1.0 / 360.0,           1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,  -691.0 / 360360.0,      1.0 / 156.0,  -3617.0 / 122400.0};

constexpr double kStirlingCutoff = 10.0;

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || std::isinf(x)) {
    throw DomainError(std::string(fn) + ": argument must be finite and > 0, got " +
                      std::to_string(x));
  }
}

double stirling_theta(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double sum = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) {
    sum = sum * inv2 + *it;
  }
  return sum * inv;
}

double lanczos_ln_gamma(double x) {
  // valid for x >= 0.5
  const double xm1 = x - 1.0;
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    a += kLanczos[i] / (xm1 + static_cast<double>(i));
  }
  const double t = xm1 + kLanczosG + 0.5;
  return kHalfLog2Pi + (xm1 + 0.5) * std::log(t) - t + std::log(a);
}

// log(expm1(v)) without overflow for large v.
double log_expm1(double v) {
  if (v > 30.0) return v + std::log1p(-std::exp(-v));
  return std::log(std::expm1(v));
}

KappaPoint make_point(double t, double v) {
  KappaPoint pt{};
  pt.t = t;
  pt.log1p_u = v;
  pt.u = std::expm1(v);
  pt.kappa = std::exp(std::log(v) - t * log_expm1(v));
  return pt;
}

}  // namespace

double ln_gamma(double x) {
  require_positive(x, "ln_gamma");
  if (x >= kStirlingCutoff) {
    return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + stirling_theta(x);
  }
  if (x < 0.5) {
    return lanczos_ln_gamma(x + 1.0) - std::log(x);
  }
  return lanczos_ln_gamma(x);
}

double theta(double x) {
  require_positive(x, "theta");
  if (x >= kStirlingCutoff) return stirling_theta(x);
  return ln_gamma(x) - (x - 0.5) * std::log(x) + x - kHalfLog2Pi;
}

double digamma(double x) {
  require_positive(x, "digamma");
  double shift = 0.0;
  while (x < kStirlingCutoff) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  const double series =
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
  return shift + std::log(x) - 0.5 / x - series;
}

double trigamma(double x) {
  require_positive(x, "trigamma");
  double shift = 0.0;
  while (x < kStirlingCutoff) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv + 0.5 * inv2 +
      inv * inv2 *
          (1.0 / 6.0 -
           inv2 * (1.0 / 30.0 - inv2 * (1.0 / 42.0 - inv2 * (1.0 / 30.0 - inv2 * 5.0 / 66.0))));
  return shift + series;
}

double log_beta(double x, double y) {
  require_positive(x, "log_beta");
  require_positive(y, "log_beta");
  return ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y);
}

double beta(double x, double y) { return std::exp(log_beta(x, y)); }

double log_beta_tilde(double x, double y) {
  const double s = x + y;
  return log_beta(x, y) + s * std::log(s) - x * std::log(x) - y * std::log(y);
}

double beta_tilde(double x, double y) { return std::exp(log_beta_tilde(x, y)); }

double lambert_w0(double z) {
  constexpr double kInvE = 0.36787944117144233;
  constexpr double kInvELo = -1.2428753672788363e-17;
  if (std::isnan(z)) throw DomainError("lambert_w0: NaN argument");
  if (std::isinf(z)) {
    if (z > 0) return std::numeric_limits<double>::infinity();
    throw DomainError("lambert_w0: argument below -1/e");
  }
  if (z == 0.0) return 0.0;

  // distance to the branch point, times e
  const double q = (z + kInvE) + kInvELo;
  if (q < -4.0 * std::numeric_limits<double>::epsilon() * kInvE) {
    throw DomainError("lambert_w0: argument below -1/e, got " + std::to_string(z));
  }
  if (q <= 0.0) return -1.0;

  double w;
  const double p = std::sqrt(2.0 * std::numbers::e * q);
  if (p < 0.5) {
    w = -1.0 + p *
                   (1.0 + p * (-1.0 / 3.0 +
                               p * (11.0 / 72.0 +
                                    p * (-43.0 / 540.0 +
                                         p * (769.0 / 17280.0 + p * (-221.0 / 8505.0))))));
    if (p < 1e-3) return w;
  } else if (z < 3.0) {
    const double l = std::log1p(z);
    w = l * (1.0 - std::log1p(l) / (2.0 + l));
  } else {
    const double l1 = std::log(z);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  for (int iter = 0; iter < 64; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(w))) {
      break;
    }
  }
  return w;
}

KappaPoint kappa_fixed_point(double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError("kappa_fixed_point: t must lie in (0, 1), got " + std::to_string(t));
  }
  // h(v) = 1 - exp(-v) - t v is concave with h(0) = 0, h'(0) = 1 - t > 0;
  // h(1 - t) > 0 and h(1 / t) < 0 bracket the positive root.
  auto h = [t](double v) { return -std::expm1(-v) - t * v; };
  double lo = 1.0 - t;
  double hi = 1.0 / t;
  double v = hi;
  for (int iter = 0; iter < 200; ++iter) {
    const double hv = h(v);
    if (hv == 0.0) break;
    if (hv > 0.0) {
      lo = v;
    } else {
      hi = v;
    }
    const double dh = std::exp(-v) - t;
    double next = (dh != 0.0) ? v - hv / dh : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - v);
    v = next;
    if (step <= 2.0 * std::numeric_limits<double>::epsilon() * v || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * v) {
      break;
    }
  }
  return make_point(t, v);
}

KappaPoint kappa_lambert(double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError("kappa_lambert: t must lie in (0, 1), got " + std::to_string(t));
  }
  const double inv_t = 1.0 / t;
  const double z = -inv_t * std::exp(-inv_t);
  const double v = lambert_w0(z) + inv_t;
  return make_point(t, v);
}

double kappa(double t) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw DomainError("kappa: t must lie in (0, 1], got " + std::to_string(t));
  }
  if (t == 1.0) return 1.0;
  return kappa_fixed_point(t).kappa;
}

}  // namespace renyi::specfun
