#pragma once

// Numerical oracles: adaptive Gauss-Kronrod quadrature on finite, half-line
// and full-line domains, nested 2-D quadrature, and seeded Monte Carlo.

#include <cstdint>
#include <functional>

#include "renyi/rng.hpp"

namespace renyi {

struct Domain {
  enum class Kind { finite, half_line, full_line };

  Kind kind = Kind::full_line;
  double a = 0.0;  // lower limit (finite, half_line)
  double b = 0.0;  // upper limit (finite)

  static Domain finite(double a, double b);
  static Domain half_line(double a);
  static Domain full_line();
};

struct NumericsConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  std::int64_t mc_samples = 200000;
  std::uint64_t rng_seed = 0x5EEDULL;

  // Throws InvalidArgument unless tolerances are positive and mc_samples >= 1000.
  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
};

enum class TailCheck { enabled, disabled };

// Adaptive G7/K15 with global bisection of the worst panel. Half-line uses
// x = a + u/(1-u), full line x = u/(1-u^2). Before integrating an unbounded
// domain (or the finite endpoint of a half-line) the tail test compares the
// mass of f on [T, 2T] against [T/2, T] along a doubling sequence and throws
// DivergenceDetected when the last three ratios are all >= 1.
QuadResult integrate(const std::function<double(double)>& f, const Domain& domain,
                     const NumericsConfig& cfg, TailCheck check = TailCheck::enabled);

// True when the tail test above fires for f on domain.
bool tail_diverges(const std::function<double(double)>& f, const Domain& domain);

// Iterated integral: outer over x, inner over y.
QuadResult integrate_2d(const std::function<double(double, double)>& f, const Domain& x_domain,
                        const Domain& y_domain, const NumericsConfig& cfg);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
};

// Sample mean of draw(rng) over cfg.mc_samples draws. Draws are split into
// fixed-size blocks, block b using stream b of the counter RNG keyed by
// cfg.rng_seed, and block statistics are merged in block order, so the
// result does not depend on how many threads evaluated the blocks.
McEstimate mc_expect(const std::function<double(CounterRng&)>& draw, const NumericsConfig& cfg);

}  // namespace renyi
