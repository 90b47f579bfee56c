#include "somorse/topology_poly.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace somorse;

namespace {

// Oracle: dynamic programming over subset sums of {1, ..., n-1}.
std::vector<std::uint64_t> subset_sum_counts(int n) {
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(pair_count(n) + 1), 0);
  ways[0] = 1;
  for (int g = 1; g < n; ++g)
    for (int s = pair_count(n); s >= g; --s)
      ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - g)];
  return ways;
}

}  // namespace

TEST(PoincareProduct, SmallDimensions) {
  EXPECT_EQ(poincare_product(1), IntPolynomial({1}));
  EXPECT_EQ(poincare_product(2), IntPolynomial({1, 1}));
  EXPECT_EQ(poincare_product(4), IntPolynomial({1, 1, 1, 2, 1, 1, 1}));
  EXPECT_THROW(poincare_product(0), std::invalid_argument);
}

TEST(EnumerateBasis, SmallDimensions) {
  using G = std::vector<int>;
  auto gens = [](const std::vector<ExteriorBasisElement>& b) {
    std::vector<G> out;
    for (const auto& e : b)
      out.push_back(e.generators);
    return out;
  };
  EXPECT_EQ(gens(enumerate_basis(1)), (std::vector<G>{{}}));
  EXPECT_EQ(gens(enumerate_basis(2)), (std::vector<G>{{}, {1}}));
  EXPECT_EQ(gens(enumerate_basis(3)), (std::vector<G>{{}, {1}, {2}, {1, 2}}));
  EXPECT_EQ(enumerate_basis(3)[3].degree, 3);
}

TEST(EnumerateBasis, RecursionMatchesDirectEnumeration) {
  for (int n = 1; n <= 14; ++n) {
    const auto rec = enumerate_basis(n);
    EXPECT_EQ(rec, enumerate_basis_direct(n));
    EXPECT_EQ(rec.size(), std::size_t{1} << (n - 1));
    for (const auto& e : rec) {
      EXPECT_TRUE(std::is_sorted(e.generators.begin(), e.generators.end()));
      int sum = 0;
      for (int g : e.generators)
        sum += g;
      EXPECT_EQ(sum, e.degree);
    }
  }
}

TEST(PoincareFromBasis, BettiNumbers) {
  EXPECT_EQ(poincare_from_basis(3), IntPolynomial({1, 1, 1, 1}));
  EXPECT_EQ(poincare_from_basis(4).coeff(3), 2u);
}

TEST(PoincareFromBasis, DualMethodIdentity) {
  for (int n = 1; n <= 12; ++n) {
    const auto basis = poincare_from_basis(n);
    const auto product = poincare_product(n);
    EXPECT_EQ(basis, product);
    EXPECT_EQ(basis, IntPolynomial(subset_sum_counts(n)));
    EXPECT_EQ(basis.value_at_one(), std::uint64_t{1} << (n - 1));
    EXPECT_EQ(basis.degree(), pair_count(n));
    EXPECT_TRUE(basis.is_palindromic());
  }
}

TEST(IsPerfect, Examples) {
  const auto r5 = is_perfect(CostVector::linear(5));
  EXPECT_TRUE(r5.perfect);
  EXPECT_EQ(r5.morse, IntPolynomial({1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1}));
  ASSERT_TRUE(r5.remainder);
  EXPECT_TRUE(r5.remainder->is_zero());

  const auto r1 = is_perfect(CostVector({3.0}));
  EXPECT_TRUE(r1.perfect);
  EXPECT_EQ(r1.morse, IntPolynomial({1}));
}

TEST(IsPerfect, RandomCostsDimensionEight) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  std::vector<double> c(8);
  for (auto& x : c)
    x = u(rng);
  std::sort(c.begin(), c.end());
  EXPECT_TRUE(is_perfect(CostVector(c)).perfect);
}

TEST(InductionStep, SplitOnLastSign) {
  for (int n = 1; n <= 11; ++n) {
    const auto s = induction_step(CostVector::linear(n + 1));
    EXPECT_TRUE(s.minus_matches) << n;
    EXPECT_TRUE(s.plus_matches) << n;
    EXPECT_TRUE(s.holds) << n;
  }
  EXPECT_THROW(induction_step(CostVector({1.0})), std::invalid_argument);
}
