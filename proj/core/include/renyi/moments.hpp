#pragma once

// Integral inequalities for ||f||_r, 0 < r < 1, in terms of power moments
// mu_s(f) = \int ||x||^s f(x) dx.

#include <span>
#include <vector>

#include "renyi/quadrature.hpp"

namespace renyi {

// Validated (r, p, q) with p < 1/r - 1 < q, plus the derived weight
// lambda = (q + 1 - 1/r) / (q - p) in (0, 1).
class TwoMomentParams {
public:
  // Throws InvalidMomentOrder unless 0 < r < 1 and p < 1/r - 1 < q.
  static TwoMomentParams make(double r, double p, double q);

  double r() const noexcept { return r_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  double lambda() const noexcept { return lambda_; }

  // Beta-function arguments r lambda / (1 - r) and r (1 - lambda) / (1 - r).
  double beta_a() const noexcept { return r_ * lambda_ / (1.0 - r_); }
  double beta_b() const noexcept { return r_ * (1.0 - lambda_) / (1.0 - r_); }

private:
  TwoMomentParams(double r, double p, double q, double lambda)
      : r_(r), p_(p), q_(q), lambda_(lambda) {}

  double r_;
  double p_;
  double q_;
  double lambda_;
};

double lambda_of(double r, double p, double q);

// psi_r(p, q) = B~(r lambda/(1-r), r(1-lambda)/(1-r)) / (q - p).
double log_psi_r(const TwoMomentParams& params);
double psi_r(const TwoMomentParams& params);

// r = 1/2 form from the reflection formula:
// pi lambda^-lambda (1-lambda)^-(1-lambda) / ((q - p) sin(pi lambda)).
double psi_half_closed(double p, double q);

struct MomentVector {
  std::vector<double> s;   // exponents
  std::vector<double> nu;  // nonnegative weights, same length

  // Throws InvalidArgument on length mismatch, empty input or negative weights.
  void validate() const;
};

// c_r(nu, s) = (\int_0^inf (sum_i nu_i x^{s_i})^{-r/(1-r)} dx)^{(1-r)/r}, or
// +inf when the integral diverges. The integral is evaluated after x = e^y,
// which turns the power-law tails into exponential ones.
double c_r_numeric(double r, const MomentVector& mv, const NumericsConfig& cfg = {});

class Support {
public:
  enum class Kind { positive_half_line, real_line, euclidean, custom };

  static Support positive_half_line() { return Support(Kind::positive_half_line, 1, 1.0); }
  static Support real_line() { return Support(Kind::real_line, 1, 2.0); }
  static Support euclidean(int n);
  // omega supplied by the caller; must lie in (0, omega(R^n)].
  static Support custom(int n, double omega_value);

  Kind kind() const noexcept { return kind_; }
  int dimension() const noexcept { return n_; }
  double stored_omega() const noexcept { return omega_; }

private:
  Support(Kind kind, int n, double omega) : kind_(kind), n_(n), omega_(omega) {}

  Kind kind_;
  int n_;
  double omega_;
};

// Volume of the unit ball intersected with cone(S); pi^{n/2} / Gamma(n/2 + 1) for R^n.
double omega(const Support& sup);
double log_omega(const Support& sup);
double log_omega_euclidean(int n);

// [omega(S) psi_r(p,q)]^{(1-r)/r} mu_np^lambda mu_nq^(1-lambda). The caller
// passes the dimension-scaled moments mu_{np}(f) and mu_{nq}(f) of ||x||.
double two_moment_bound(double mu_np, double mu_nq, const TwoMomentParams& params,
                        const Support& sup);

// c_r(nu, s) * sum_i nu_i mu_{s_i}(f). Zero when every moment is zero, +inf when
// c_r diverges.
double k_moment_bound(const MomentVector& mv, std::span<const double> moments, double r,
                      const NumericsConfig& cfg = {});

}  // namespace renyi
