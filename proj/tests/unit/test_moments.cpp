#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "renyi/error.hpp"
#include "renyi/moments.hpp"
#include "support/oracles.hpp"

using renyi::MomentVector;
using renyi::Support;
using renyi::TwoMomentParams;

namespace {

constexpr double kPi = std::numbers::pi;

struct Grid {
  double r;
  double p;
  double q;
};

// 27 valid (r, p, q) with p > -1 so that every test density has the moment.
std::vector<Grid> validity_grid() {
  std::vector<Grid> out;
  for (double r : {0.25, 0.5, 0.75}) {
    const double t = 1.0 / r - 1.0;
    for (double dp : {0.2, 0.5, 0.8}) {
      for (double dq : {0.5, 1.0, 2.0}) out.push_back({r, t - dp * (t + 1.0), t + dq});
    }
  }
  return out;
}

}  // namespace

TEST(Lambda, Examples) {
  EXPECT_DOUBLE_EQ(renyi::lambda_of(0.5, 0.0, 2.0), 0.5);
  EXPECT_DOUBLE_EQ(renyi::lambda_of(0.5, -1.0, 3.0), 0.5);
  EXPECT_NEAR(renyi::lambda_of(0.9, 0.0, 1.0), 2.0 - 10.0 / 9.0, 1e-15);
}

TEST(Lambda, RejectsOrdersThatDoNotStraddle) {
  EXPECT_THROW(renyi::lambda_of(0.5, 1.0, 2.0), renyi::InvalidMomentOrder);
  EXPECT_THROW(renyi::lambda_of(0.5, 0.0, 1.0), renyi::InvalidMomentOrder);
  EXPECT_THROW(TwoMomentParams::make(1.0, 0.0, 2.0), renyi::InvalidMomentOrder);
  EXPECT_THROW(TwoMomentParams::make(0.0, 0.0, 2.0), renyi::InvalidMomentOrder);
}

TEST(Lambda, InUnitIntervalExactlyWhenOrdersStraddle) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> ur(0.01, 0.99);
  std::uniform_real_distribution<double> us(-5.0, 10.0);
  int valid = 0;
  for (int i = 0; i < 5000; ++i) {
    const double r = ur(gen);
    const double p = us(gen);
    const double q = us(gen);
    const double t = 1.0 / r - 1.0;
    if (p < t && t < q) {
      ++valid;
      const double l = renyi::lambda_of(r, p, q);
      EXPECT_GT(l, 0.0);
      EXPECT_LT(l, 1.0);
    } else {
      EXPECT_THROW(renyi::lambda_of(r, p, q), renyi::InvalidMomentOrder);
    }
  }
  EXPECT_GT(valid, 100);
}

TEST(Psi, HalfOrderZeroTwoIsPi) {
  EXPECT_NEAR(renyi::psi_r(TwoMomentParams::make(0.5, 0.0, 2.0)), kPi, 1e-12);
  EXPECT_NEAR(renyi::psi_half_closed(0.0, 2.0), kPi, 1e-12);
}

TEST(Psi, HalfOrderMatchesReflectionForm) {
  for (double p : {-0.9, -0.5, 0.0, 0.5, 0.99}) {
    for (double q : {1.01, 1.5, 2.0, 4.0, 9.0}) {
      const double l = (q - 1.0) / (q - p);
      const double want =
          kPi * std::pow(l, -l) * std::pow(1.0 - l, -(1.0 - l)) / ((q - p) * std::sin(kPi * l));
      EXPECT_NEAR(renyi::psi_r(TwoMomentParams::make(0.5, p, q)) / want, 1.0, 1e-10)
          << "p=" << p << " q=" << q;
    }
  }
}

TEST(Psi, MatchesBetaTildeFromLgamma) {
  for (const auto& g : validity_grid()) {
    const auto params = TwoMomentParams::make(g.r, g.p, g.q);
    const double c = g.r / (1.0 - g.r);
    const double l = (g.q + 1.0 - 1.0 / g.r) / (g.q - g.p);
    const double want = oracle::log_beta_tilde(c * l, c * (1.0 - l)) - std::log(g.q - g.p);
    EXPECT_NEAR(renyi::log_psi_r(params), want, 1e-11);
  }
}

TEST(Psi, OrderNearOneWithZeroAndTwo) {
  const double want = std::sqrt(2.0 * std::numbers::e) * std::tgamma(1.5);
  EXPECT_NEAR(renyi::psi_r(TwoMomentParams::make(0.999, 0.0, 2.0)), want, 1e-2);
}

TEST(CrNumeric, ArctanCase) {
  const MomentVector mv{{0.0, 2.0}, {1.0, 1.0}};
  EXPECT_NEAR(renyi::c_r_numeric(0.5, mv), kPi / 2.0, 1e-9);
}

TEST(CrNumeric, SingleMomentDiverges) {
  const MomentVector mv{{0.0, 2.0}, {1.0, 0.0}};
  EXPECT_EQ(renyi::c_r_numeric(0.5, mv), std::numeric_limits<double>::infinity());
  const MomentVector same_side{{2.0, 3.0}, {1.0, 1.0}};
  EXPECT_EQ(renyi::c_r_numeric(0.5, same_side), std::numeric_limits<double>::infinity());
}

TEST(CrNumeric, ScaledWeightsMatchSubstitution) {
  // nu = (g^{1/2}, g^{-1/2}), s = (0, 2), r = 1/2: x = g^{1/2} t gives
  // \int (g^{1/2} + g^{-1/2} x^2)^{-1} dx = \int (1 + t^2)^{-1} dt = pi / 2.
  const double g = 4.0;
  const MomentVector mv{{0.0, 2.0}, {std::sqrt(g), 1.0 / std::sqrt(g)}};
  EXPECT_NEAR(renyi::c_r_numeric(0.5, mv), kPi / 2.0, 1e-9);
}

TEST(CrNumeric, RejectsMalformedVectors) {
  EXPECT_THROW(renyi::c_r_numeric(0.5, MomentVector{{0.0}, {1.0, 1.0}}), renyi::InvalidArgument);
  EXPECT_THROW(renyi::c_r_numeric(0.5, MomentVector{{}, {}}), renyi::InvalidArgument);
  EXPECT_THROW(renyi::c_r_numeric(0.5, MomentVector{{0.0, 2.0}, {1.0, -1.0}}),
               renyi::InvalidArgument);
}

TEST(CrNumeric, MinimizedConstructionMatchesPsi) {
  const double mu_p = 1.3;
  const double mu_q = 2.7;
  for (double r : {0.3, 0.5, 0.7}) {
    const double t = 1.0 / r - 1.0;
    for (double dp : {0.3, 0.6, 0.9}) {
      for (double dq : {0.5, 1.0, 2.5}) {
        const double p = t - dp * (t + 1.0);
        const double q = t + dq;
        const auto params = TwoMomentParams::make(r, p, q);
        auto objective = [&](double log_rho) {
          const double rho = std::exp(log_rho);
          const MomentVector mv{{p, q}, {1.0, rho}};
          return renyi::c_r_numeric(r, mv) * (mu_p + rho * mu_q);
        };
        const double numeric = oracle::minimize_over_ratio(objective, -12.0, 12.0);
        const double closed = renyi::two_moment_bound(mu_p, mu_q, params,
                                                      Support::positive_half_line());
        EXPECT_NEAR(numeric / closed, 1.0, 1e-6) << "r=" << r << " p=" << p << " q=" << q;
      }
    }
  }
}

TEST(Omega, StandardSupports) {
  EXPECT_DOUBLE_EQ(renyi::omega(Support::positive_half_line()), 1.0);
  EXPECT_DOUBLE_EQ(renyi::omega(Support::real_line()), 2.0);
  EXPECT_NEAR(renyi::omega(Support::euclidean(2)), kPi, 1e-14);
  EXPECT_NEAR(renyi::omega(Support::euclidean(3)), 4.0 * kPi / 3.0, 1e-14);
  EXPECT_NEAR(renyi::omega(Support::euclidean(1)), 2.0, 1e-14);
  EXPECT_DOUBLE_EQ(renyi::omega(Support::custom(2, 0.5)), 0.5);
}

TEST(Omega, EuclideanIsTheLargest) {
  for (int n = 1; n <= 12; ++n) {
    const double full = renyi::omega(Support::euclidean(n));
    EXPECT_NO_THROW(Support::custom(n, full));
    EXPECT_THROW(Support::custom(n, full * (1.0 + 1e-9)), renyi::InvalidArgument);
    EXPECT_THROW(Support::custom(n, 0.0), renyi::InvalidArgument);
    if (n == 1) {
      EXPECT_LE(renyi::omega(Support::positive_half_line()), full);
      EXPECT_LE(renyi::omega(Support::real_line()), full);
    }
  }
}

TEST(TwoMomentBound, ZeroFunction) {
  EXPECT_EQ(renyi::two_moment_bound(0.0, 0.0, TwoMomentParams::make(0.5, 0.0, 2.0),
                                    Support::positive_half_line()),
            0.0);
}

TEST(TwoMomentBound, ExponentialDensity) {
  const double norm = oracle::r_norm([](double x) { return std::exp(-x); }, 0.5);
  EXPECT_NEAR(norm, 4.0, 1e-9);
  const double bound = renyi::two_moment_bound(1.0, 2.0, TwoMomentParams::make(0.5, 0.0, 2.0),
                                               Support::positive_half_line());
  EXPECT_GE(bound, norm);
}

TEST(TwoMomentBound, Homogeneity) {
  // f(x) -> f(x / a) scales mu_s by a^{s+1} and ||f||_r by a^{1/r}.
  const auto params = TwoMomentParams::make(0.4, 0.3, 3.0);
  const double b1 = renyi::two_moment_bound(1.7, 5.2, params, Support::positive_half_line());
  const double a = 2.0;
  const double b2 = renyi::two_moment_bound(1.7 * std::pow(a, 1.3), 5.2 * std::pow(a, 4.0), params,
                                            Support::positive_half_line());
  EXPECT_NEAR(b2 / b1, std::pow(a, 1.0 / 0.4), 1e-12);
}

TEST(TwoMomentBound, HoldsForTestDensities) {
  for (const auto& d : oracle::half_line_densities()) {
    for (const auto& g : validity_grid()) {
      ASSERT_GT(g.p, d.lower);
      const double norm = oracle::r_norm(d.pdf, g.r);
      const double bound = renyi::two_moment_bound(
          d.moment(g.p), d.moment(g.q), TwoMomentParams::make(g.r, g.p, g.q),
          Support::positive_half_line());
      EXPECT_GE(bound - norm, -1e-9) << d.name << " r=" << g.r << " p=" << g.p << " q=" << g.q;
    }
  }
}

TEST(KMomentBound, ZeroMoments) {
  const MomentVector mv{{0.0, 2.0}, {1.0, 1.0}};
  const std::vector<double> m{0.0, 0.0};
  EXPECT_EQ(renyi::k_moment_bound(mv, m, 0.5), 0.0);
}

TEST(KMomentBound, TwoTermsAtOptimalRatioMatchTwoMomentBound) {
  for (const auto& g : validity_grid()) {
    const double mu_p = 0.8;
    const double mu_q = 3.1;
    const auto params = TwoMomentParams::make(g.r, g.p, g.q);
    const double l = params.lambda();
    const double rho = (1.0 - l) * mu_p / (l * mu_q);
    const MomentVector mv{{g.p, g.q}, {1.0, rho}};
    const std::vector<double> m{mu_p, mu_q};
    const double k2 = renyi::k_moment_bound(mv, m, g.r);
    const double closed =
        renyi::two_moment_bound(mu_p, mu_q, params, Support::positive_half_line());
    EXPECT_NEAR(k2 / closed, 1.0, 1e-9) << "r=" << g.r << " p=" << g.p << " q=" << g.q;
  }
}

TEST(KMomentBound, ZeroWeightTermIsInert) {
  const MomentVector mv2{{0.0, 2.0}, {1.0, 0.5}};
  const MomentVector mv3{{0.0, 1.0, 2.0}, {1.0, 0.0, 0.5}};
  const std::vector<double> m2{1.0, 2.0};
  const std::vector<double> m3{1.0, 1.5, 2.0};
  EXPECT_EQ(renyi::k_moment_bound(mv2, m2, 0.5), renyi::k_moment_bound(mv3, m3, 0.5));
}

TEST(KMomentBound, InfiniteWhenConstantDiverges) {
  const MomentVector mv{{2.0, 3.0}, {1.0, 1.0}};
  const std::vector<double> m{1.0, 1.0};
  EXPECT_EQ(renyi::k_moment_bound(mv, m, 0.5), std::numeric_limits<double>::infinity());
}
