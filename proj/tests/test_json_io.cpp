#include "somorse/json_io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace somorse;

TEST(JsonIo, CriticalPointRecordSchema) {
  const auto recs = enumerate_critical_points(CostVector::linear(3));
  const Json j = to_json(recs[2]);
  const std::string expected = R"j({"eps":[-1,1,-1],"index":1,"value":-2.0,)j"
                               R"j("hessian_diagonal":{"(1,2)":-1.0,"(1,3)":4.0,"(2,3)":1.0}})j";
  EXPECT_EQ(j.dump(), expected);
}

TEST(JsonIo, PairKeysKeepPairOrder) {
  const int n = 11;
  const Json j = pair_vector_to_json(Eigen::VectorXd::LinSpaced(pair_count(n), 0, pair_count(n) - 1), n);
  int k = 0;
  for (const auto& [key, value] : j.items()) {
    EXPECT_EQ(key, all_pairs(n)[static_cast<std::size_t>(k)].label());
    EXPECT_EQ(value.get<double>(), k);
    ++k;
  }
}

TEST(JsonIo, PolynomialRoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> coeff(0, 1000);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(trial % 9));
    for (auto& x : c)
      x = coeff(rng);
    const IntPolynomial p(c);
    EXPECT_EQ(polynomial_from_json(Json::parse(to_json(p).dump())), p);
  }
  EXPECT_THROW(polynomial_from_json(Json::parse("[1,-2]")), std::invalid_argument);
  EXPECT_THROW(polynomial_from_json(Json::parse("[1.5]")), std::invalid_argument);
}

TEST(JsonIo, MatrixRoundTripIsExact) {
  const auto a = haar_sample(5, 77);
  EXPECT_EQ(matrix_from_json(Json::parse(matrix_to_json(a.matrix()).dump())), a.matrix());
  EXPECT_THROW(matrix_from_json(Json::parse("[[1,0],[0]]")), std::invalid_argument);
  EXPECT_THROW(matrix_from_json(Json::parse("[]")), std::invalid_argument);
}

TEST(JsonIo, PerfectnessReport) {
  const Json j = to_json(is_perfect(CostVector::linear(2)));
  EXPECT_EQ(j["morse"], Json::parse("[1,1]"));
  EXPECT_EQ(j["remainder"], Json::array());
  EXPECT_EQ(j["perfect"], true);
}
