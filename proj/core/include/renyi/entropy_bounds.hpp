#pragma once

// Upper bounds on Renyi entropy from two moments, their gaps for the
// lognormal and Gaussian families, and the r -> 1 corollaries for
// differential entropy.

#include <optional>
#include <utility>
#include <vector>

#include "renyi/distributions.hpp"
#include "renyi/moments.hpp"

namespace renyi {

struct BoundReport {
  double r = 0.0;
  double p = 0.0;
  double q = 0.0;
  double lambda = 0.0;
  double bound = 0.0;             // nats
  std::optional<double> entropy;  // h_r when the law has a density
  std::optional<double> gap;      // bound - entropy
};

// h_r(X) <= log omega(S) + log psi_r(p, q) + L_r(||X||^n; p, q).
BoundReport entropy_bound(const ScalarDistribution& d, const Support& sup, int n, double r,
                          double p, double q, const NumericsConfig& cfg = {});

// phi(x) = x - log x - 1, the convex penalty of the lognormal gap.
double log_penalty(double x);

// Optimal two-moment gap of any lognormal law:
// 2 theta(c/2) - theta(c) + (1/2) log(e r^{1/(1-r)}), c = r/(1-r).
double lognormal_gap_closed(double r);

// Same value from log(B~(c/2, c/2) sqrt(c/4)) + 1/2 - (1/2) log(2 pi r^{1/(r-1)}).
double lognormal_gap_closed_beta(double r);

// Lognormal gap at
//   p = (1-r)/r - (1-lambda) sqrt((1-r) u / (r lambda (1-lambda))),
//   q = (1-r)/r + lambda     sqrt((1-r) u / (r lambda (1-lambda))).
// Depends on u and sigma2 only through u sigma2.
double lognormal_gap_at(double r, double lambda, double u, double sigma2);

// (p, q) of the parametrization above.
std::pair<double, double> lognormal_pq(double r, double lambda, double u);

// Lognormal gap on the p = 0 slice:
// Delta_r + phi((q - (1-r)/r) sigma2)/2 + theta(c - 1/q) + theta(1/q) - 2 theta(c/2).
double lognormal_gap_p_zero(double r, double q, double sigma2);

struct TracePoint {
  double lambda;  // NaN on the p = 0 slice
  double spread;  // u, z or q - (1-r)/r depending on the search
  double value;
};

struct GapReport {
  double r = 0.0;
  double p = 0.0;
  double q = 0.0;
  double bound = 0.0;
  double entropy = 0.0;
  double gap = 0.0;
  std::vector<TracePoint> optimizer_trace;  // best inner value per outer probe
};

enum class GapSearch { two_moment, p_zero };

// inf over (p, q) of the gap of entropy_bound. The two-moment search runs a
// golden-section over lambda in (0, 1) whose objective is a golden-section over
// log D, where p = (1-r)/r - (1-lambda) D and q = (1-r)/r + lambda D. With
// GapSearch::p_zero the search is over log(q - (1-r)/r) alone.
GapReport optimal_gap(const ScalarDistribution& d, const Support& sup, int n, double r,
                      GapSearch search = GapSearch::two_moment, const NumericsConfig& cfg = {});

struct GaussGapParams {
  double r;
  int n;
  double lambda;
  double z;

  // D = sqrt(2 (1-r) z / (lambda (1-lambda) n)); feasible when (1 - lambda) D < 1.
  double spread() const;
  bool feasible() const;
  // p = (1-r)/r - (1-lambda) D / r, q = (1-r)/r + lambda D / r.
  std::pair<double, double> pq() const;
};

// Q_{r,n}(lambda, z) from three log-gamma terms. Throws Infeasible.
double gaussian_Q(const GaussGapParams& g);

// (z/2) (1 + sqrt(lambda/(1-lambda) b z))^{-1}, b = 2 (1-r) / (9 n).
double gaussian_Q_lower_bound(const GaussGapParams& g);

// Gap of the two-moment bound for Y ~ N(0, I_n) at (lambda, z). Throws Infeasible.
double gaussian_gap(const GaussGapParams& g);

// inf over feasible (lambda, z) of gaussian_gap.
GapReport optimal_gaussian_gap(double r, int n);

struct Prop6Row {
  int n;
  double delta_gaussian;
  double delta_lognormal;
};

// Optimal Gaussian gap for n = 1, 2, 4, ... <= n_max next to the lognormal gap.
std::vector<Prop6Row> prop6_limit_check(double r, int n_max);

// h_r(XY) - h_r(tY) - Delta_r(Y; p, q) for a discrete X on (0, t] and a scalar
// Y with a density; the density of XY is the exact finite mixture.
double mult_bound_check(const ScalarDistribution& dY, const ScalarDistribution& dX, double t,
                        double r, double p, double q, const NumericsConfig& cfg = {});

struct DiffEntropyBounds {
  // lnG(n/s + 1) - lnG(n/2 + 1) + (n/2) log pi + (n/s) log(e s E||X||^s / n)
  double moment;
  // E log|X| + (1/2) log(2 pi e Var log|X|); empty when Var log|X| is 0 or infinite
  std::optional<double> log_moment;
};

DiffEntropyBounds diff_entropy_bounds(const ScalarDistribution& d, int n, double s,
                                      const NumericsConfig& cfg = {});

// p(r) = (1-r)/r - sqrt((1-r)/r (1-lambda)/lambda u),
// q(r) = (1-r)/r + sqrt((1-r)/r lambda/(1-lambda) u); psi_r(p(r), q(r)) -> sqrt(2 pi / u).
std::pair<double, double> psi_limit_params(double r, double lambda, double u);

}  // namespace renyi
