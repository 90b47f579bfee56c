#include "somorse/lie_core.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace somorse;

namespace {

PairIndex random_pair(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, pair_count(n) - 1);
  return all_pairs(n)[static_cast<std::size_t>(pick(rng))];
}

}  // namespace

TEST(CostVector, Validation) {
  EXPECT_NO_THROW(CostVector({0.0, 1.0, 2.5}));
  EXPECT_THROW(CostVector({1.0, 1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(CostVector({2.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(CostVector({-1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(CostVector(std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(CostVector({0.0, NAN}), std::invalid_argument);

  const auto c = CostVector::linear(4);
  EXPECT_EQ(c.dim(), 4);
  EXPECT_DOUBLE_EQ(c[0], 1.0);
  EXPECT_DOUBLE_EQ(c.largest(), 4.0);
}

TEST(PairIndex, OrderAndCount) {
  for (int n = 1; n <= 9; ++n) {
    const auto pairs = all_pairs(n);
    ASSERT_EQ(static_cast<int>(pairs.size()), pair_count(n));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      EXPECT_EQ(pair_position(pairs[k], n), static_cast<int>(k));
      if (k > 0) {
        EXPECT_LT(pairs[k - 1], pairs[k]);
      }
    }
  }
  EXPECT_EQ((PairIndex{0, 1}).label(), "(1,2)");
}

TEST(GivensCurve, ZeroAngleIsIdentity) {
  const auto b = givens_curve({0, 1}, 0.0, 2);
  EXPECT_TRUE(b.matrix().isApprox(Eigen::Matrix2d::Identity()));
}

TEST(GivensCurve, QuarterTurn) {
  const auto b = givens_curve({0, 1}, std::numbers::pi / 2, 2);
  Eigen::Matrix2d expected;
  expected << 0, -1, 1, 0;
  EXPECT_LT((b.matrix() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(GivensCurve, EmbedsTwoByTwoBlock) {
  const double theta = 0.7;
  const auto b = RotationMatrix::identity(3) * givens_curve({0, 1}, theta, 3);
  Eigen::Matrix3d expected;
  expected << std::cos(theta), -std::sin(theta), 0, std::sin(theta), std::cos(theta), 0, 0, 0, 1;
  EXPECT_EQ(b.matrix(), Eigen::MatrixXd(expected));
}

TEST(GivensCurve, InvalidPair) {
  EXPECT_THROW(givens_curve({1, 1}, 0.1, 3), std::invalid_argument);
  EXPECT_THROW(givens_curve({0, 3}, 0.1, 3), std::invalid_argument);
  EXPECT_THROW(givens_curve({2, 1}, 0.1, 3), std::invalid_argument);
}

TEST(GivensCurve, GroupLawProperty) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-4.0, 4.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    const auto p = random_pair(n, rng);
    const double t1 = angle(rng), t2 = angle(rng);
    const auto lhs = givens_curve(p, t1, n) * givens_curve(p, t2, n);
    const auto rhs = givens_curve(p, t1 + t2, n);
    EXPECT_LT((lhs.matrix() - rhs.matrix()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_TRUE(is_rotation(rhs.matrix(), 1e-12));
  }
}

TEST(CurveVelocity, SignPatternRightCurve) {
  for (int e1 : {1, -1}) {
    const int e2 = e1;  // det +1
    Eigen::Matrix2d d;
    d << e1, 0, 0, e2;
    const auto v = curve_velocity(RotationMatrix(d), {0, 1}, CurveSide::right);
    EXPECT_EQ(v(0, 1), -e1);
    EXPECT_EQ(v(1, 0), e2);
    EXPECT_EQ(v(0, 0), 0.0);
    EXPECT_EQ(v(1, 1), 0.0);
  }
}

TEST(CurveVelocity, IdentityGivesBareGenerator) {
  const auto v = curve_velocity(RotationMatrix::identity(3), {0, 2}, CurveSide::right);
  Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
  expected(0, 2) = -1;
  expected(2, 0) = 1;
  EXPECT_EQ(v, Eigen::MatrixXd(expected));
}

TEST(CurveVelocity, MatchesCentralDifference) {
  std::mt19937_64 rng(5);
  const double h = 1e-5;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const auto a = haar_sample(n, rng);
    const auto p = random_pair(n, rng);
    for (auto side : {CurveSide::right, CurveSide::left}) {
      Eigen::MatrixXd fd;
      if (side == CurveSide::right)
        fd = ((a * givens_curve(p, h, n)).matrix() - (a * givens_curve(p, -h, n)).matrix()) / (2 * h);
      else
        fd = ((givens_curve(p, h, n) * a).matrix() - (givens_curve(p, -h, n) * a).matrix()) / (2 * h);
      EXPECT_LT((curve_velocity(a, p, side) - fd).cwiseAbs().maxCoeff(), 1e-8);
    }
  }
}

TEST(CurveVelocity, RightVelocitiesSpanTangentSpace) {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 7; ++n) {
    const auto a = haar_sample(n, rng);
    const auto pairs = all_pairs(n);
    Eigen::MatrixXd stacked(n * n, static_cast<Eigen::Index>(pairs.size()));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      stacked.col(static_cast<Eigen::Index>(k)) =
          curve_velocity(a, pairs[k], CurveSide::right).reshaped();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(stacked);
    EXPECT_EQ(lu.rank(), pair_count(n)) << "n = " << n;
  }
}

TEST(HaarSample, DimensionOne) {
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    const auto a = haar_sample(1, seed);
    EXPECT_EQ(a.matrix(), Eigen::MatrixXd::Identity(1, 1));
  }
}

TEST(HaarSample, MembershipAndDeterminism) {
  for (int n = 2; n <= 8; ++n)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto a = haar_sample(n, seed);
      EXPECT_TRUE(is_rotation(a.matrix(), 1e-12));
      EXPECT_EQ(a.matrix(), haar_sample(n, seed).matrix());
    }
}

TEST(HaarSample, EntryMeanIsZero) {
  std::mt19937_64 rng(2024);
  const int samples = 10000;
  double sum11 = 0.0, sum_sq = 0.0;
  for (int s = 0; s < samples; ++s) {
    const auto a = haar_sample(3, rng);
    sum11 += a(0, 0);
    sum_sq += a(0, 0) * a(0, 0);
  }
  EXPECT_LT(std::abs(sum11 / samples), 0.05);
  // Each column is uniform on the sphere, so E[x11^2] = 1/n.
  EXPECT_NEAR(sum_sq / samples, 1.0 / 3.0, 0.02);
}

TEST(Retract, ZeroCoefficients) {
  const auto a = haar_sample(4, 17);
  const auto r = retract(a, Eigen::VectorXd::Zero(6), 0.8);
  EXPECT_EQ(r.matrix(), a.matrix());
}

TEST(Retract, TwoByTwoClosedForm) {
  for (double theta : {-1.3, -0.2, 0.5, 1.9}) {
    Eigen::VectorXd k(1);
    k << 1.0;
    const auto r = retract(RotationMatrix::identity(2), k, theta);
    Eigen::Matrix2d expected;
    expected << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    EXPECT_LT((r.matrix() - expected).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Retract, StaysOnManifold) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> step(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 6;
    const auto a = haar_sample(n, rng);
    Eigen::VectorXd k(pair_count(n));
    for (auto& x : k)
      x = normal(rng);
    const auto r = retract(a, k, step(rng));
    EXPECT_LE(rotation_residual(r.matrix()), 1e-10);
  }
}

TEST(Retract, WrongLength) {
  EXPECT_THROW(retract(RotationMatrix::identity(3), Eigen::VectorXd::Zero(2), 1.0),
               std::invalid_argument);
}

TEST(IsRotation, Examples) {
  EXPECT_TRUE(is_rotation(Eigen::MatrixXd::Identity(3, 3), 1e-12));
  Eigen::Matrix2d reflect;
  reflect << 1, 0, 0, -1;
  EXPECT_FALSE(is_rotation(reflect, 1e-12));
  EXPECT_TRUE(is_rotation(haar_sample(5, 1).matrix(), 1e-10));
  EXPECT_THROW(is_rotation(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
  EXPECT_THROW(RotationMatrix(Eigen::MatrixXd(reflect)), std::invalid_argument);
}
