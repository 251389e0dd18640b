#include <cmath>

#include <gtest/gtest.h>

#include "support/helpers.hpp"

using namespace netmetric;

namespace {

double mean_weight(const Network& n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j) s += n(i, j);
  return s / static_cast<double>(n.size() * (n.size() - 1) / 2);
}

bool in_unit_range(const Network& n) {
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j)
      if (i != j && !(n(i, j) >= kMinWeight && n(i, j) <= 1.0)) return false;
  return true;
}

bool triangle_holds(const Network& n) {
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j)
      for (std::size_t k = 0; k < n.size(); ++k)
        if (n(i, j) > n(i, k) + n(k, j) + kTol) return false;
  return true;
}

}  // namespace

TEST(GenEr, SmallAndDeterministic) {
  const auto two = gen_er(2, 1);
  EXPECT_GT(two(0, 1), 0.0);
  EXPECT_LE(two(0, 1), 1.0);
  EXPECT_EQ(gen_er(6, 9, 2), gen_er(6, 9, 2));
  EXPECT_NE(gen_er(6, 9, 2), gen_er(6, 9, 3));
  EXPECT_NE(gen_er(6, 9, 2), gen_er(6, 10, 2));
}

TEST(GenEr, MeanWeightNearHalf) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto n = gen_er(25, seed);
    EXPECT_TRUE(in_unit_range(n));
    const double m = mean_weight(n);
    EXPECT_GE(m, 0.4) << seed;
    EXPECT_LE(m, 0.6) << seed;
  }
}

TEST(GenCircle, KernelValues) {
  const auto same = circle_network({{0.1, 0.2}, {0.1, 0.2}}, 0.5);
  EXPECT_EQ(same(0, 1), 1.0);
  const auto anti = circle_network({{1, 0}, {-1, 0}}, 0.5);
  EXPECT_NEAR(anti(0, 1), std::exp(-8.0), 1e-15);
  EXPECT_EQ(gen_circle(10, 0.5, 3), gen_circle(10, 0.5, 3));
  EXPECT_TRUE(in_unit_range(gen_circle(12, 0.5, 4)));
}

TEST(GenCorr, CorrelationValues) {
  const std::vector<double> u{1, 2, 3, 5}, neg{-1, -2, -3, -5};
  EXPECT_NEAR(correlation_network({u, u})(0, 1), 1.0, 1e-15);
  EXPECT_EQ(correlation_network({u, neg})(0, 1), kMinWeight);
  EXPECT_NEAR(pearson(u, neg), -1.0, 1e-15);
  EXPECT_EQ(gen_corr(8, 5, 1), gen_corr(8, 5, 1));
  EXPECT_TRUE(in_unit_range(gen_corr(12, 5, 2)));
}

TEST(GenCorr, Preconditions) {
  try {
    gen_corr(5, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter);
  }
  try {
    correlation_network({{1, 1, 1}, {1, 2, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateFeature);
  }
}

TEST(GenGamma, Family) {
  EXPECT_EQ(gen_gamma(1).dissim(), (Matrix{{0, 1, 1}, {1, 0, 11}, {1, 11, 0}}));
  EXPECT_TRUE(triangle_holds(gen_gamma(11)));
  EXPECT_TRUE(triangle_holds(gen_gamma(5.5)));
  EXPECT_FALSE(triangle_holds(gen_gamma(5)));
  EXPECT_THROW(gen_gamma(0), Error);
  EXPECT_THROW(gen_gamma(-1), Error);
}

TEST(Gen, InvalidNodeCount) {
  for (auto model : {Model::ErdosRenyi, Model::UnitCircle, Model::Correlation}) {
    GenSpec spec;
    spec.model = model;
    spec.n = 1;
    try {
      generate(spec);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidN);
    }
  }
}

TEST(Gen, ModelNames) {
  for (auto model : {Model::ErdosRenyi, Model::UnitCircle, Model::Correlation, Model::GammaFamily})
    EXPECT_EQ(parse_model(model_name(model)), model);
  EXPECT_THROW(parse_model("nope"), Error);
}
