#pragma once

#include <functional>

namespace renyi {

struct ScalarMin {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
  bool at_boundary = false;  // minimizer landed on lo or hi
};

struct GoldenOptions {
  int grid_points = 24;   // coarse scan that locates a finite, bracketed minimum
  double x_tol = 1e-10;   // relative to 1 + |x|
  int max_evaluations = 400;
};

// Golden-section search on [lo, hi] seeded by a uniform scan. The objective
// may return +inf on infeasible points; throws OptimizerNoConverge when every
// scanned point is infeasible or the budget runs out before x_tol.
ScalarMin golden_minimize(const std::function<double(double)>& f, double lo, double hi,
                          const GoldenOptions& opts = {});

}  // namespace renyi
