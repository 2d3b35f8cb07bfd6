#pragma once

#include <stdexcept>
#include <string>

namespace renyi {

// Root of every exception thrown by the library. Divergent integrals that
// are legal answers (c_r, log-moments outside their finiteness region) are
// reported as +inf values instead.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a special function.
class DomainError : public Error {
public:
  using Error::Error;
};

// (r, p, q) violates p < 1/r - 1 < q, or Prop.-9 style p < 1 < q.
class InvalidMomentOrder : public Error {
public:
  using Error::Error;
};

// A log-moment needed by a bound is +inf.
class MomentDiverges : public Error {
public:
  using Error::Error;
};

// The tail test of the integrator found a non-decaying contribution.
class DivergenceDetected : public Error {
public:
  using Error::Error;
};

// Adaptive quadrature ran out of panels before reaching tolerance.
class MaxSubdivisions : public Error {
public:
  MaxSubdivisions(const std::string& what, double estimate, double error)
      : Error(what), estimate_(estimate), error_(error) {}

  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

private:
  double estimate_;
  double error_;
};

class OptimizerNoConverge : public Error {
public:
  using Error::Error;
};

// (lambda, z) outside the feasible set of the Gaussian gap parametrization.
class Infeasible : public Error {
public:
  using Error::Error;
};

// Operation not available for this distribution family / channel kind.
class Unsupported : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

}  // namespace renyi
