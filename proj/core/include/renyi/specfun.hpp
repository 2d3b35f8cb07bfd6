#pragma once

// Special functions behind the closed-form bounds: log-gamma and its Binet
// remainder, the Beta function and its normalized variant B~, the principal
// branch of Lambert W, and the logarithm-power ratio kappa(t).
//
// All functions are pure and reentrant. Domain violations throw DomainError.

namespace renyi::specfun {

// log Gamma(x) for x > 0.
double ln_gamma(double x);

// Binet remainder: theta(x) = log Gamma(x) - (x - 1/2) log x + x - log(2 pi)/2.
// Evaluated from the Stirling series for x >= 10.
double theta(double x);

double digamma(double x);
double trigamma(double x);

double log_beta(double x, double y);
double beta(double x, double y);

// B~(x, y) = B(x, y) (x + y)^(x + y) x^-x y^-y, assembled in log space.
double log_beta_tilde(double x, double y);
double beta_tilde(double x, double y);

// Principal branch W0 on [-1/e, inf). Values of z within a few ulps below
// -1/e are treated as the branch point.
double lambert_w0(double z);

// Maximizer of log(1 + u) / u^t for t in (0, 1). Stored as v = log(1 + u)
// because u overflows a double for t below ~1.4e-3.
struct KappaPoint {
  double t;
  double log1p_u;  // v = log(1 + u*)
  double u;        // expm1(v); +inf once it no longer fits a double
  double kappa;
};

// Safeguarded Newton on 1 - exp(-v) = t v, the fixed point u = t (1+u) log(1+u)
// rewritten in v. Requires 0 < t < 1.
KappaPoint kappa_fixed_point(double t);

// Same maximizer from u* = exp(W0(-(1/t) e^(-1/t)) + 1/t) - 1.
KappaPoint kappa_lambert(double t);

// kappa(t) = sup_{u > 0} log(1 + u) / u^t; exactly 1 at t = 1.
double kappa(double t);

}  // namespace renyi::specfun
