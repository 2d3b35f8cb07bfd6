#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <vector>

#include "renyi/distributions.hpp"
#include "renyi/error.hpp"
#include "renyi/mi_bounds.hpp"
#include "renyi/specfun.hpp"

namespace dist = renyi::dist;
using renyi::ChannelModel;
using renyi::Conditioning;
using renyi::Domain;
using renyi::VsValue;

namespace {

constexpr double kPi = std::numbers::pi;

double phi(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_pdf(double y, double mean, double var) {
  const double d = y - mean;
  return std::exp(-0.5 * d * d / var) / std::sqrt(2.0 * kPi * var);
}

// V_0 for a two-atom AWGN input: w1 w2 \int (N(y; x1, 1) - N(y; x2, 1))^2 dy.
double two_atom_v0(double x1, double x2, double w1) {
  const double k = 1.0 / (2.0 * std::sqrt(kPi));
  const double d = x1 - x2;
  return w1 * (1.0 - w1) * 2.0 * k * (1.0 - std::exp(-0.25 * d * d));
}

}  // namespace

TEST(ShiftedNormalMoment, KnownValues) {
  for (double m : {0.0, 0.7, -2.0}) {
    EXPECT_EQ(renyi::shifted_normal_abs_moment(m, 0.0), 1.0);
    EXPECT_NEAR(renyi::shifted_normal_abs_moment(m, 2.0), 1.0 + m * m, 1e-10);
    const double folded = m * (1.0 - 2.0 * normal_cdf(-m)) + 2.0 * phi(m);
    EXPECT_NEAR(renyi::shifted_normal_abs_moment(m, 1.0), folded, 1e-10);
  }
  EXPECT_NEAR(renyi::shifted_normal_abs_moment(0.0, 4.0), 3.0, 1e-10);
}

TEST(Kernel, DiagonalAtZeroOrder) {
  const auto ch = ChannelModel::awgn(dist::point_mass(0.0));
  for (double x : {-1.0, 0.0, 2.5}) {
    EXPECT_NEAR(renyi::kernel_Ks(ch, x, x, 0.0), 1.0 / (2.0 * std::sqrt(kPi)), 1e-14);
  }
  EXPECT_NEAR(renyi::kernel_Ks(ch, 1.0, -1.0, 0.0), phi(std::sqrt(2.0)) / std::sqrt(2.0), 1e-14);
}

TEST(Kernel, MatchesOutputIntegral) {
  const auto ch = ChannelModel::awgn(dist::point_mass(0.0));
  for (double s : {0.0, 0.5, 1.0, 2.0}) {
    for (auto [x1, x2] : {std::pair{0.3, -0.4}, std::pair{1.0, 2.0}, std::pair{-1.5, -1.5}}) {
      const auto res = renyi::integrate(
          [&](double y) {
            return std::pow(std::abs(y), s) * normal_pdf(y, x1, 1.0) * normal_pdf(y, x2, 1.0);
          },
          Domain::full_line(), {});
      EXPECT_NEAR(renyi::kernel_Ks(ch, x1, x2, s), res.value, 1e-10) << "s=" << s;
    }
  }
}

TEST(Kernel, OutputScaling) {
  const auto ch = ChannelModel::awgn(dist::point_mass(0.0));
  for (double a : {0.5, 2.0, -3.0}) {
    for (double s : {0.0, 2.0}) {
      EXPECT_NEAR(renyi::kernel_Ks(ch.scaled(a), 0.2, 1.1, s),
                  std::pow(std::abs(a), s - 1.0) * renyi::kernel_Ks(ch, 0.2, 1.1, s), 1e-13);
    }
  }
}

TEST(Kernel, GramMatrixPositiveSemidefinite) {
  const auto ch = ChannelModel::awgn(dist::point_mass(0.0));
  for (double s : {0.0, 1.0, 2.0}) {
    const std::vector<double> pts{-1.0, 0.0, 1.0, 0.4, 2.2};
    const auto n = static_cast<Eigen::Index>(pts.size());
    Eigen::MatrixXd gram(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) gram(i, j) = renyi::kernel_Ks(ch, pts[i], pts[j], s);
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-12) << "s=" << s;
  }
}

TEST(Kernel, ScaleMixtureUnsupported) {
  const auto ch = ChannelModel::scale_mixture(dist::point_mass(1.0));
  EXPECT_THROW(renyi::kernel_Ks(ch, 0.0, 0.0, 0.0), renyi::Unsupported);
}

TEST(Vs, DegenerateInputsGiveZero) {
  for (double s : {0.0, 1.0, 2.0}) {
    EXPECT_EQ(renyi::V_s(ChannelModel::awgn(dist::point_mass(1.3)), s, Conditioning::given_X).value,
              0.0);
    EXPECT_NEAR(
        renyi::V_s(ChannelModel::scale_mixture(dist::point_mass(2.0)), s, Conditioning::given_U)
            .value,
        0.0, 1e-15);
  }
}

TEST(Vs, ConstantMixingEqualsGaussianInput) {
  for (double c : {0.5, 1.0, 4.0}) {
    const double mix =
        renyi::V_s(ChannelModel::scale_mixture(dist::point_mass(c)), 0.0, Conditioning::given_X)
            .value;
    const double gauss =
        renyi::V_s(ChannelModel::awgn(dist::gaussian(0.0, c)), 0.0, Conditioning::given_X).value;
    const double want = (1.0 - 1.0 / std::sqrt(1.0 + c)) / (2.0 * std::sqrt(kPi));
    EXPECT_NEAR(mix, want, 1e-12);
    EXPECT_NEAR(gauss, want, 1e-12);
    EXPECT_NEAR(mix, gauss, 1e-9);
    for (double s : {0.5, 2.0}) {
      EXPECT_NEAR(
          renyi::V_s(ChannelModel::scale_mixture(dist::point_mass(c)), s, Conditioning::given_X)
              .value,
          renyi::V_s(ChannelModel::awgn(dist::gaussian(0.0, c)), s, Conditioning::given_X).value,
          1e-9)
          << "s=" << s;
    }
  }
}

TEST(Vs, TwoAtomInputClosedForm) {
  const auto ch = ChannelModel::awgn(dist::two_point(0.3, 2.5));
  const auto v = renyi::V_s(ch, 0.0, Conditioning::given_X);
  EXPECT_EQ(v.method, VsValue::Method::closed_form);
  EXPECT_NEAR(v.value, two_atom_v0(1.0, 2.5, 0.7), 1e-14);
}

TEST(Vs, ClosedFormsMatchDirectIntegral) {
  const std::vector<std::pair<ChannelModel, Conditioning>> cases = {
      {ChannelModel::awgn(dist::two_point(0.3, 2.5)), Conditioning::given_X},
      {ChannelModel::awgn(dist::gaussian(0.5, 2.0)), Conditioning::given_X},
      {ChannelModel::scale_mixture(dist::two_point(0.1, 11.0)), Conditioning::given_U},
      {ChannelModel::scale_mixture(dist::two_point(0.1, 11.0)), Conditioning::given_X},
  };
  for (const auto& [ch, cond] : cases) {
    for (double s : {0.0, 0.5, 2.0}) {
      const double a = renyi::V_s(ch, s, cond).value;
      const double b = renyi::V_s_direct(ch, s, cond).value;
      EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, std::abs(b))) << "s=" << s;
      EXPECT_GT(a, 0.0);
    }
  }
}

TEST(Vs, DirectMatchesKernelDecomposition) {
  renyi::NumericsConfig cfg;
  cfg.mc_samples = 200000;
  const std::vector<std::pair<ChannelModel, Conditioning>> cases = {
      {ChannelModel::awgn(dist::two_point(0.4, 3.0)), Conditioning::given_X},
      {ChannelModel::awgn(dist::lognormal(0.0, 0.5)), Conditioning::given_X},
      {ChannelModel::scale_mixture(dist::lognormal(0.0, 1.0)), Conditioning::given_U},
      {ChannelModel::scale_mixture(dist::lognormal(0.0, 1.0)), Conditioning::given_X},
  };
  for (const auto& [ch, cond] : cases) {
    for (double s : {0.0, 2.0}) {
      const auto direct = renyi::V_s_direct(ch, s, cond, cfg);
      const auto kernel = renyi::V_s_kernel(ch, s, cond, cfg);
      const double se = kernel.standard_error.value_or(0.0);
      EXPECT_NEAR(direct.value, kernel.value, std::max(4.0 * se, 1e-9)) << "s=" << s;
    }
  }
}

TEST(Vs, ScalingLaw) {
  const std::vector<std::pair<ChannelModel, Conditioning>> cases = {
      {ChannelModel::awgn(dist::two_point(0.3, 2.5)), Conditioning::given_X},
      {ChannelModel::scale_mixture(dist::two_point(0.2, 4.0)), Conditioning::given_U},
  };
  for (const auto& [ch, cond] : cases) {
    for (double a : {0.5, 2.0, 3.0}) {
      for (double s : {0.0, 2.0}) {
        const double base = renyi::V_s_direct(ch, s, cond).value;
        const double scaled = renyi::V_s_direct(ch.scaled(a), s, cond).value;
        EXPECT_NEAR(scaled, std::pow(a, s - 1.0) * base, 1e-8) << "a=" << a << " s=" << s;
      }
    }
  }
}

TEST(Vs, AwgnHasNoMixingVariable) {
  EXPECT_THROW(renyi::V_s(ChannelModel::awgn(dist::gaussian(0.0, 1.0)), 0.0, Conditioning::given_U),
               renyi::Unsupported);
}

TEST(Vs, UpperBoundResidual) {
  EXPECT_NEAR(renyi::vs_upper_bound_check(ChannelModel::scale_mixture(dist::point_mass(3.0)), 1.0),
              0.0, 1e-15);
  EXPECT_GE(renyi::vs_upper_bound_check(ChannelModel::scale_mixture(dist::two_point(0.5, 3.0)), 0.0),
            -1e-12);
  EXPECT_GE(renyi::vs_upper_bound_check(ChannelModel::scale_mixture(dist::two_point(0.1, 11.0)), 2.0),
            -1e-12);
}

TEST(Vs, UpperBoundResidualByHand) {
  // U in {1, a} with weights (1 - e, e), s = 2: Gamma(3/2)/(2 pi) 2 e (1 - e) E(1+U)^{1/2}.
  const double e = 0.1;
  const double a = 11.0;
  const auto ch = ChannelModel::scale_mixture(dist::two_point(e, a));
  const double bound = std::tgamma(1.5) / (2.0 * kPi) * 2.0 * e * (1.0 - e) *
                       ((1.0 - e) * std::sqrt(2.0) + e * std::sqrt(1.0 + a));
  const double v2 = renyi::V_s_direct(ch, 2.0, Conditioning::given_U).value;
  EXPECT_NEAR(renyi::vs_upper_bound_check(ch, 2.0), bound - v2, 1e-9);
}

// Two atoms with variances v1 = 2, v2 = 1 + a: K_s(i, j) = E|Z|^s / sqrt(2 pi (vi + vj)),
// Z ~ N(0, vi vj / (vi + vj)).
double two_atom_pair_kernel(double vi, double vj, double s) {
  const double w = vi * vj / (vi + vj);
  return std::pow(2.0 * w, 0.5 * s) * std::tgamma(0.5 * (s + 1.0)) / std::sqrt(kPi) /
         std::sqrt(2.0 * kPi * (vi + vj));
}

TEST(Vs, SimpleBoundFailsForRareHeavyAtomAtSTwo) {
  const double e = 0.01;
  const double a = 101.0;
  const double v1 = 2.0;
  const double v2 = 1.0 + a;
  const double v = e * (1.0 - e) *
                   (two_atom_pair_kernel(v1, v1, 2.0) + two_atom_pair_kernel(v2, v2, 2.0) -
                    2.0 * two_atom_pair_kernel(v1, v2, 2.0));
  const auto ch = ChannelModel::scale_mixture(dist::two_point(e, a));
  EXPECT_NEAR(renyi::V_s_direct(ch, 2.0, Conditioning::given_U).value, v, 1e-12);
  EXPECT_LT(renyi::vs_upper_bound_check(ch, 2.0), -1e-2);
  // the pairwise form E[(1 - w_U) K_s(U, U)] still holds
  const double pairwise =
      e * (1.0 - e) * (two_atom_pair_kernel(v1, v1, 2.0) + two_atom_pair_kernel(v2, v2, 2.0));
  EXPECT_GT(pairwise, v);
}

TEST(Similarity, ExactAndMonteCarlo) {
  for (double c : {0.5, 2.0}) {
    EXPECT_NEAR(renyi::expected_gaussian_similarity(dist::gaussian(1.0, c)).mean,
                1.0 / std::sqrt(1.0 + c), 1e-14);
  }
  const double two = renyi::expected_gaussian_similarity(dist::two_point(0.25, 3.0)).mean;
  EXPECT_NEAR(two, 1.0 - 2.0 * 0.25 * 0.75 * (1.0 - std::exp(-1.0)), 1e-14);

  const auto d = dist::lognormal(0.0, 0.5);
  const auto mc = renyi::expected_gaussian_similarity(d);
  const auto quad = renyi::integrate_2d(
      [&](double a, double b) {
        return renyi::pdf(d, a) * renyi::pdf(d, b) * std::exp(-0.25 * (a - b) * (a - b));
      },
      Domain::half_line(0.0), Domain::half_line(0.0), {});
  EXPECT_GT(mc.std_error, 0.0);
  EXPECT_NEAR(mc.mean, quad.value, 4.0 * mc.std_error);
}

TEST(Similarity, SmallVariationBound) {
  const double x0 = 0.7;
  for (double sd : {0.01, 0.05}) {
    const double dissim = 1.0 - renyi::expected_gaussian_similarity(dist::gaussian(x0, sd * sd)).mean;
    for (double eps : {0.005, 0.02, 0.1}) {
      const double tail = 2.0 * normal_cdf(-eps / sd);
      EXPECT_LE(dissim, eps * eps + 2.0 * tail) << "sd=" << sd << " eps=" << eps;
    }
  }
}

TEST(MarginalMass, Normalized) {
  const std::vector<ChannelModel> chans = {
      ChannelModel::awgn(dist::gaussian(0.0, 2.0)),
      ChannelModel::awgn(dist::two_point(0.3, 4.0)),
      ChannelModel::awgn(dist::lognormal(0.0, 1.0)),
      ChannelModel::scale_mixture(dist::two_point(0.01, 11.0)),
      ChannelModel::scale_mixture(dist::lognormal(0.0, 1.0)),
      ChannelModel::awgn(dist::two_point(0.3, 4.0)).scaled(2.5),
  };
  for (const auto& ch : chans) EXPECT_NEAR(renyi::marginal_mass(ch), 1.0, 1e-8);
}

TEST(ChiSquare, GaussianInputEqualsVariance) {
  for (double v : {0.25, 1.0, 3.0}) {
    const auto ch = ChannelModel::awgn(dist::gaussian(0.0, v));
    EXPECT_NEAR(renyi::chi_square(ch, Conditioning::given_X), v, 1e-8);
    EXPECT_NEAR(renyi::chi2_mi_bound(ch, Conditioning::given_X), std::log1p(v), 1e-8);
  }
}

TEST(ChiSquare, DegenerateInput) {
  EXPECT_EQ(renyi::chi_square(ChannelModel::awgn(dist::point_mass(1.0)), Conditioning::given_X),
            0.0);
  EXPECT_EQ(renyi::chi2_mi_bound(ChannelModel::awgn(dist::point_mass(1.0)), Conditioning::given_X),
            0.0);
}

TEST(ChiSquare, PowerBoundAtOneRecoversChiSquare) {
  const std::vector<ChannelModel> chans = {
      ChannelModel::awgn(dist::gaussian(0.0, 1.0)),
      ChannelModel::awgn(dist::two_point(0.3, 4.0)),
      ChannelModel::scale_mixture(dist::two_point(0.1, 11.0)),
  };
  for (const auto& ch : chans) {
    EXPECT_NEAR(renyi::prop7_bound(ch, 1.0, Conditioning::given_X),
                renyi::chi_square(ch, Conditioning::given_X), 1e-9);
  }
}

TEST(PowerBound, HalfOrderMatchesSquareRootVariance) {
  const double w = 0.3;
  const double x1 = 1.0;
  const double x2 = 4.0;
  const auto ch = ChannelModel::awgn(dist::two_point(1.0 - w, x2));
  const auto res = renyi::integrate(
      [&](double y) {
        const double d = normal_pdf(y, x1, 1.0) - normal_pdf(y, x2, 1.0);
        return std::sqrt(w * (1.0 - w)) * std::abs(d);
      },
      Domain::full_line(), {});
  EXPECT_NEAR(renyi::prop7_bound(ch, 0.5, Conditioning::given_X),
              renyi::specfun::kappa(0.5) * res.value, 1e-9);
}

TEST(PowerBound, Errors) {
  const auto ch = ChannelModel::awgn(dist::gaussian(0.0, 1.0));
  EXPECT_THROW(renyi::prop7_bound(ch, 0.0, Conditioning::given_X), renyi::InvalidArgument);
  EXPECT_THROW(renyi::prop7_bound(ch, 1.5, Conditioning::given_X), renyi::InvalidArgument);
  EXPECT_THROW(renyi::prop8_bound(ch, 1.0, Conditioning::given_X), renyi::InvalidArgument);
  EXPECT_THROW(renyi::prop9_bound(ch, 1.0, 2.0, Conditioning::given_X), renyi::InvalidMomentOrder);
}

TEST(OutputEntropy, GaussianInput) {
  for (double v : {0.5, 2.0}) {
    const auto ch = ChannelModel::awgn(dist::gaussian(0.0, v));
    for (double r : {0.3, 0.7}) {
      EXPECT_NEAR(renyi::output_renyi_entropy(ch, r),
                  renyi::renyi_entropy(dist::gaussian(0.0, 1.0 + v), r), 1e-8);
    }
  }
}

TEST(EntropyPowerBound, AssembledFromParts) {
  const auto ch = ChannelModel::awgn(dist::two_point(0.3, 4.0));
  const double r = 0.5;
  const double t = (1.0 - r) / (2.0 - r);
  const double h = renyi::output_renyi_entropy(ch, r);
  const double v0 = two_atom_v0(1.0, 4.0, 0.7);
  EXPECT_NEAR(renyi::prop8_bound(ch, r, Conditioning::given_X),
              renyi::specfun::kappa(t) * std::pow(std::exp(h) * v0, t), 1e-9);
}

TEST(TwoMomentMiBound, Constant) {
  EXPECT_NEAR(renyi::prop9_constant(0.5), renyi::specfun::kappa(0.5) * std::sqrt(2.0 * kPi), 1e-14);
  for (double l : {0.2, 0.7}) {
    const double want = renyi::specfun::kappa(0.5) *
                        std::sqrt(kPi * std::pow(l, -l) * std::pow(1.0 - l, -(1.0 - l)) /
                                  std::sin(kPi * l));
    EXPECT_NEAR(renyi::prop9_constant(l), want, 1e-13);
  }
}

TEST(TwoMomentMiBound, AssembledFromMoments) {
  const auto ch = ChannelModel::scale_mixture(dist::two_point(0.05, 1.0 + 1.0 / std::sqrt(0.05)));
  for (auto [p, q] : {std::pair{0.0, 2.0}, std::pair{0.5, 3.0}}) {
    const double l = (q - 1.0) / (q - p);
    const double vp = renyi::V_s_direct(ch, p, Conditioning::given_U).value;
    const double vq = renyi::V_s_direct(ch, q, Conditioning::given_U).value;
    const double want =
        renyi::prop9_constant(l) * std::sqrt(2.0 * std::pow(vp, l) * std::pow(vq, 1.0 - l) / (q - p));
    EXPECT_NEAR(renyi::prop9_bound(ch, p, q, Conditioning::given_U), want, 1e-9 * want);
  }
}

TEST(MutualInformation, GaussianCapacity) {
  for (double v : {0.5, 1.0, 4.0}) {
    EXPECT_NEAR(renyi::mi_oracle(ChannelModel::awgn(dist::gaussian(0.0, v)), Conditioning::given_X),
                0.5 * std::log1p(v), 1e-6);
  }
}

TEST(MutualInformation, DegenerateInput) {
  EXPECT_NEAR(renyi::mi_oracle(ChannelModel::awgn(dist::point_mass(2.0)), Conditioning::given_X),
              0.0, 1e-12);
  EXPECT_NEAR(
      renyi::mi_oracle(ChannelModel::scale_mixture(dist::point_mass(2.0)), Conditioning::given_U),
      0.0, 1e-12);
}

TEST(MutualInformation, BelowEveryBound) {
  const std::vector<std::pair<ChannelModel, Conditioning>> cases = {
      {ChannelModel::awgn(dist::gaussian(0.0, 2.0)), Conditioning::given_X},
      {ChannelModel::awgn(dist::two_point(0.3, 4.0)), Conditioning::given_X},
      {ChannelModel::scale_mixture(dist::two_point(0.1, 1.0 + 1.0 / std::sqrt(0.1))),
       Conditioning::given_U},
      {ChannelModel::scale_mixture(dist::two_point(0.1, 1.0 + 1.0 / std::sqrt(0.1))),
       Conditioning::given_X},
  };
  for (const auto& [ch, cond] : cases) {
    const double mi = renyi::mi_oracle(ch, cond);
    EXPECT_GT(mi, 0.0);
    for (double t : {0.1, 0.25, 0.5, 0.75, 1.0}) {
      EXPECT_LE(mi, renyi::prop7_bound(ch, t, cond) + 1e-9) << "t=" << t;
    }
    for (double r : {0.1, 0.5, 0.9}) EXPECT_LE(mi, renyi::prop8_bound(ch, r, cond) + 1e-9);
    EXPECT_LE(mi, renyi::prop9_bound(ch, 0.0, 2.0, cond) + 1e-9);
    EXPECT_LE(mi, renyi::chi2_mi_bound(ch, cond) + 1e-9);
  }
}

TEST(MutualInformation, DataProcessing) {
  for (const auto& mix : {dist::two_point(0.2, 5.0), dist::lognormal(0.0, 1.0)}) {
    const auto ch = ChannelModel::scale_mixture(mix);
    EXPECT_LE(renyi::mi_oracle(ch, Conditioning::given_U),
              renyi::mi_oracle(ch, Conditioning::given_X) + 1e-8);
  }
}

TEST(MutualInformation, TwoAtomAgainstDirectIntegral) {
  const double w = 0.3;
  const auto ch = ChannelModel::awgn(dist::two_point(1.0 - w, 3.0));
  const auto res = renyi::integrate(
      [&](double y) {
        const double g1 = normal_pdf(y, 1.0, 1.0);
        const double g2 = normal_pdf(y, 3.0, 1.0);
        const double f = (1.0 - w) * g1 + w * g2;
        double acc = 0.0;
        if (g1 > 0.0) acc += (1.0 - w) * g1 * std::log(g1 / f);
        if (g2 > 0.0) acc += w * g2 * std::log(g2 / f);
        return acc;
      },
      Domain::full_line(), {});
  EXPECT_NEAR(renyi::mi_oracle(ch, Conditioning::given_X), res.value, 1e-9);
}
