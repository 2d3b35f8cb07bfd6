#pragma once

// Scalar distribution families with closed-form log-moments and Renyi
// entropies, plus a numerically integrated density.

#include <functional>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "renyi/moments.hpp"
#include "renyi/quadrature.hpp"
#include "renyi/rng.hpp"

namespace renyi {

// X = exp(W), W ~ N(mu, sigma2).
struct LogNormal {
  double mu = 0.0;
  double sigma2 = 1.0;
};

// Descriptor of Y ~ N(0, I_n). Moments and samples are those of ||Y||;
// entropies are those of the vector Y.
struct GaussianMagnitude {
  int n = 1;
};

// Atoms 1 and a with probabilities 1 - eps and eps.
struct TwoPoint {
  double eps = 0.5;
  double a = 2.0;
};

struct PointMass {
  double c = 1.0;
};

struct Gaussian {
  double mean = 0.0;
  double var = 1.0;
};

// Density on a domain; normalization is checked at construction.
struct GenericPdf {
  std::shared_ptr<const std::function<double(double)>> pdf;
  Domain domain;
};

using ScalarDistribution =
    std::variant<LogNormal, GaussianMagnitude, TwoPoint, PointMass, Gaussian, GenericPdf>;

namespace dist {

// Validating factories; throw InvalidArgument on bad parameters.
ScalarDistribution lognormal(double mu, double sigma2);
ScalarDistribution gaussian_magnitude(int n);
ScalarDistribution two_point(double eps, double a);
ScalarDistribution point_mass(double c);
ScalarDistribution gaussian(double mean, double var);
// Rejects densities whose integral over domain differs from 1 by more than 1e-6.
ScalarDistribution generic_pdf(std::function<double(double)> pdf, const Domain& domain,
                               const NumericsConfig& cfg = {});

}  // namespace dist

bool is_discrete(const ScalarDistribution& d);

// Dimension of the underlying random vector (n for GaussianMagnitude, else 1).
int dimension(const ScalarDistribution& d);

// Support of the underlying random vector: R^n for GaussianMagnitude, R for
// Gaussian and for generic densities reaching negative values, R+ otherwise.
Support natural_support(const ScalarDistribution& d);

// log E|X|^s, or +inf where the moment is infinite.
double log_moment(const ScalarDistribution& d, double s, const NumericsConfig& cfg = {});

// h_r in nats for r in (0, 1). Throws Unsupported for discrete laws and
// DivergenceDetected when \int f^r diverges for a generic density.
double renyi_entropy(const ScalarDistribution& d, double r, const NumericsConfig& cfg = {});

// Differential entropy in nats; Unsupported for discrete laws.
double shannon_entropy(const ScalarDistribution& d, const NumericsConfig& cfg = {});

// E log|X| and Var log|X|; Var is 0 for point masses, +inf when undefined.
struct LogMeanVar {
  double mean;
  double var;
};
LogMeanVar log_mean_var(const ScalarDistribution& d, const NumericsConfig& cfg = {});

// (r lambda/(1-r)) log E|X|^{np} + (r(1-lambda)/(1-r)) log E|X|^{nq}.
// Throws MomentDiverges when either log-moment is +inf.
double L_r(const ScalarDistribution& d, const TwoMomentParams& params, int n = 1,
           const NumericsConfig& cfg = {});
double L_r(const ScalarDistribution& d, double r, double p, double q,
           const NumericsConfig& cfg = {});

// One draw of |X| (||Y|| for GaussianMagnitude, signed X for Gaussian).
// Throws Unsupported for generic densities.
double sample(const ScalarDistribution& d, CounterRng& rng);

// Density of the scalar law (chi density for GaussianMagnitude); Unsupported
// for discrete laws.
double pdf(const ScalarDistribution& d, double x);

// Atoms and weights of a discrete law; empty for continuous ones.
std::vector<std::pair<double, double>> atoms(const ScalarDistribution& d);

// Domain carrying the density of a continuous law.
Domain density_domain(const ScalarDistribution& d);

// E g(X) by seeded Monte Carlo over draws of d.
McEstimate mc_expect(const ScalarDistribution& d, const std::function<double(double)>& g,
                     const NumericsConfig& cfg = {});

// E g(X1, X2) with X1, X2 i.i.d. from d.
McEstimate mc_expect_pair(const ScalarDistribution& d,
                          const std::function<double(double, double)>& g,
                          const NumericsConfig& cfg = {});

}  // namespace renyi
