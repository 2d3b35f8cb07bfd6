#pragma once

// Mutual-information bounds from the variance of the conditional density
// for scalar Gaussian-noise channels.

#include <optional>

#include "renyi/distributions.hpp"
#include "renyi/quadrature.hpp"

namespace renyi {

// Y = a (X + W) with W ~ N(0, 1). For awgn the law is that of X; for
// scale_mixture X = A sqrt(U) with A ~ N(0, 1) and the law is that of U >= 0.
class ChannelModel {
public:
  enum class Kind { awgn, scale_mixture };

  static ChannelModel awgn(ScalarDistribution input);
  static ChannelModel scale_mixture(ScalarDistribution mixing);

  // Same channel with the output multiplied by a != 0.
  ChannelModel scaled(double a) const;

  Kind kind() const noexcept { return kind_; }
  const ScalarDistribution& law() const noexcept { return law_; }
  double output_scale() const noexcept { return scale_; }

private:
  ChannelModel(Kind kind, ScalarDistribution law, double scale)
      : kind_(kind), law_(std::move(law)), scale_(scale) {}

  Kind kind_;
  ScalarDistribution law_;
  double scale_;
};

enum class Conditioning { given_X, given_U };

// E|W + m|^s for W ~ N(0, 1), s > -1, by quadrature (exactly 1 at s = 0).
double shifted_normal_abs_moment(double m, double s, const NumericsConfig& cfg = {});

// K_s(x1, x2) = \int |y|^s f(y|x1) f(y|x2) dy
//             = 2^{-(1+s)/2} E|W + (x1+x2)/sqrt 2|^s phi((x1-x2)/sqrt 2), times |a|^{s-1}.
// awgn channels only.
double kernel_Ks(const ChannelModel& ch, double x1, double x2, double s,
                 const NumericsConfig& cfg = {});

struct VsValue {
  enum class Method { closed_form, quadrature, monte_carlo };

  double s = 0.0;
  double value = 0.0;
  Method method = Method::closed_form;
  std::optional<double> standard_error;
};

const char* to_string(VsValue::Method m);

// V_s = \int |y|^s var(f(y|Z)) dy with Z = X or U, s > -1. Uses exact finite
// sums for discrete laws and Gaussian inputs, Monte Carlo over continuous
// mixing laws, and quadrature otherwise. awgn with given_U is Unsupported.
VsValue V_s(const ChannelModel& ch, double s, Conditioning cond, const NumericsConfig& cfg = {});

// The same integral evaluated directly in y.
VsValue V_s_direct(const ChannelModel& ch, double s, Conditioning cond,
                   const NumericsConfig& cfg = {});

// E[K_s(Z', Z'') - K_s(X1, X2)]: exact sums over discrete inputs, Monte Carlo
// otherwise.
VsValue V_s_kernel(const ChannelModel& ch, double s, Conditioning cond,
                   const NumericsConfig& cfg = {});

// E exp(-(X1 - X2)^2 / 4) for X1, X2 i.i.d. from d. Exact for discrete and
// Gaussian laws, Monte Carlo otherwise.
McEstimate expected_gaussian_similarity(const ScalarDistribution& d,
                                        const NumericsConfig& cfg = {});

// \int f(y) dy of the output density.
double marginal_mass(const ChannelModel& ch, const NumericsConfig& cfg = {});

// chi^2 between the joint law of (Z, Y) and the product of marginals.
double chi_square(const ChannelModel& ch, Conditioning cond, const NumericsConfig& cfg = {});

// log(1 + chi^2).
double chi2_mi_bound(const ChannelModel& ch, Conditioning cond, const NumericsConfig& cfg = {});

// kappa(t) \int f(y)^{1-2t} var(f(y|Z))^t dy, 0 < t <= 1.
double prop7_bound(const ChannelModel& ch, double t, Conditioning cond,
                   const NumericsConfig& cfg = {});

// kappa(t) (exp(h_r(Y)) V_0)^t with t = (1-r)/(2-r).
double prop8_bound(const ChannelModel& ch, double r, Conditioning cond,
                   const NumericsConfig& cfg = {});

// C(lambda) sqrt(omega(R) V_p^lambda V_q^{1-lambda} / (q - p)), lambda = (q-1)/(q-p),
// C(lambda) = kappa(1/2) sqrt(pi lambda^-lambda (1-lambda)^-(1-lambda) / sin(pi lambda)).
double prop9_bound(const ChannelModel& ch, double p, double q, Conditioning cond,
                   const NumericsConfig& cfg = {});
double prop9_constant(double lambda);

// h_r(Y) of the output by quadrature.
double output_renyi_entropy(const ChannelModel& ch, double r, const NumericsConfig& cfg = {});

// I(X;Y) or I(U;Y) by quadrature in y.
double mi_oracle(const ChannelModel& ch, Conditioning cond, const NumericsConfig& cfg = {});

// Gamma((1+s)/2)/(2 pi) P(U1 != U2) E(1+U)^{(s-1)/2} - V_s(Y|U) for a discrete
// mixing law.
double vs_upper_bound_check(const ChannelModel& ch, double s, const NumericsConfig& cfg = {});

}  // namespace renyi
