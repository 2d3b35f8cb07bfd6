#include "renyi/optimize.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "renyi/error.hpp"

namespace renyi {

ScalarMin golden_minimize(const std::function<double(double)>& f, double lo, double hi,
                          const GoldenOptions& opts) {
  if (!(lo < hi)) throw InvalidArgument("golden_minimize: empty interval");
  const int n = std::max(2, opts.grid_points);
  int evals = 0;
  auto eval = [&](double x) {
    ++evals;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  std::vector<double> xs(n + 1);
  std::vector<double> vs(n + 1);
  int best = -1;
  for (int i = 0; i <= n; ++i) {
    xs[i] = lo + (hi - lo) * i / n;
    vs[i] = eval(xs[i]);
    if (std::isfinite(vs[i]) && (best < 0 || vs[i] < vs[best])) best = i;
  }
  if (best < 0) throw OptimizerNoConverge("golden_minimize: objective infinite on the whole scan");

  double a = xs[std::max(0, best - 1)];
  double b = xs[std::min(n, best + 1)];
  constexpr double kInvPhi = 0.61803398874989484820;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  while (b - a > opts.x_tol * (1.0 + std::abs(0.5 * (a + b)))) {
    if (evals >= opts.max_evaluations) {
      throw OptimizerNoConverge("golden_minimize: evaluation budget exhausted");
    }
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = eval(d);
    }
  }

  ScalarMin out;
  out.evaluations = evals;
  out.x = fc <= fd ? c : d;
  out.value = std::min(fc, fd);
  if (vs[best] < out.value) {
    out.x = xs[best];
    out.value = vs[best];
  }
  const double edge = 1e-6 * (hi - lo);
  out.at_boundary = (out.x - lo) < edge || (hi - out.x) < edge;
  return out;
}

}  // namespace renyi
