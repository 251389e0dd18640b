#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "support/helpers.hpp"

using namespace netmetric;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

// Oracle: try all permutations with an explicit matrix comparison.
bool brute_isomorphic(const Network& a, const Network& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = 0; j < a.size() && ok; ++j) ok = std::abs(a(i, j) - b(p[i], p[j])) <= kTol;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST(Network, ValidatesMinimalCase) {
  const auto net = Network::validate(Matrix{{0, 1}, {1, 0}});
  EXPECT_EQ(net.size(), 2u);
  EXPECT_EQ(net.labels(), (std::vector<std::string>{"0", "1"}));
}

TEST(Network, GammaOneNetwork) {
  const auto net = Network::validate(Matrix{{0, 1, 1}, {1, 0, 11}, {1, 11, 0}});
  EXPECT_EQ(net(1, 2), 11.0);
  EXPECT_EQ(net.dissim(), testutil::gamma(1).dissim());
}

TEST(Network, RejectsAsymmetryWithIndices) {
  try {
    Network::validate(Matrix{{0, 1}, {2, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AsymmetricMatrix);
    EXPECT_NE(std::string(e.what()).find("(0,1)/(1,0)"), std::string::npos) << e.what();
  }
}

TEST(Network, RejectsInvalidInputs) {
  EXPECT_EQ(kind_of([] { Network::validate(Matrix(2, 3)); }), ErrorKind::ShapeMismatch);
  EXPECT_EQ(kind_of([] { Network::validate(Matrix(0, 0)); }), ErrorKind::ShapeMismatch);
  EXPECT_EQ(kind_of([] { Network::validate(Matrix{{1, 1}, {1, 0}}); }), ErrorKind::NonzeroDiagonal);
  EXPECT_EQ(kind_of([] { Network::validate(Matrix{{0, 0}, {0, 0}}); }), ErrorKind::NonpositiveOffDiagonal);
  EXPECT_EQ(kind_of([] { Network::validate(Matrix{{0, -1}, {-1, 0}}); }), ErrorKind::NonpositiveOffDiagonal);
  EXPECT_EQ(kind_of([] { Network::validate(Matrix{{0, NAN}, {NAN, 0}}); }), ErrorKind::NonFiniteValue);
  EXPECT_EQ(kind_of([] { Network::validate(Matrix{{0, 1}, {1, 0}}, {"a", "a"}); }), ErrorKind::DuplicateLabel);
  EXPECT_EQ(kind_of([] { Network::validate(Matrix{{0, 1}, {1, 0}}, {"a"}); }), ErrorKind::ShapeMismatch);
}

TEST(Network, SnapsTinyAsymmetry) {
  const auto net = Network::validate(Matrix{{1e-12, 1.0}, {1.0 + 1e-11, 0}});
  EXPECT_EQ(net(0, 0), 0.0);
  EXPECT_EQ(net(0, 1), net(1, 0));
}

TEST(Network, MappingAndCorrespondenceChecks) {
  EXPECT_NO_THROW((NodeMapping{{0, 1, 1}}.check(3, 2)));
  EXPECT_EQ(kind_of([] { NodeMapping{{0, 2}}.check(2, 2); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { NodeMapping{{0}}.check(2, 2); }), ErrorKind::DimensionMismatch);
  EXPECT_NO_THROW(Correspondence::diagonal(3).check(3, 3));
  EXPECT_EQ(kind_of([] { Correspondence{{{0, 0}}}.check(1, 2); }), ErrorKind::InvalidCorrespondence);
  EXPECT_EQ(kind_of([] { Correspondence{{{0, 0}, {2, 1}}}.check(2, 2); }), ErrorKind::InvalidCorrespondence);
}

TEST(Isomorphism, RelabelingIsIsomorphism) {
  SplitMix64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto a = testutil::random_network(5, rng);
    std::vector<std::size_t> perm{3, 0, 4, 1, 2};
    EXPECT_TRUE(are_isomorphic(a, permute(a, perm)));
  }
}

TEST(Isomorphism, GammaNetworksDiffer) { EXPECT_FALSE(are_isomorphic(testutil::gamma(1), testutil::gamma(2))); }

TEST(Isomorphism, AgreesWithBruteForceOracle) {
  SplitMix64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto a = testutil::random_network(4, rng);
    const auto b = testutil::random_network(4, rng);
    EXPECT_EQ(are_isomorphic(a, b), brute_isomorphic(a, b));
    EXPECT_FALSE(are_isomorphic(a, b));
  }
  // Same weight multiset, different arrangement: a path-like and a star-like
  // pattern over weights {1,1,1,2,2,2}.
  const auto p = Network::validate(Matrix{{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 2}, {1, 2, 2, 0}});
  const auto q = Network::validate(Matrix{{0, 1, 1, 1}, {1, 0, 2, 2}, {1, 2, 0, 2}, {1, 2, 2, 0}});
  EXPECT_EQ(are_isomorphic(p, q), brute_isomorphic(p, q));
  EXPECT_FALSE(are_isomorphic(p, q));
}

TEST(Isomorphism, GuardsLargeInputs) {
  SplitMix64 rng(1);
  const auto a = testutil::random_network(9, rng);
  EXPECT_EQ(kind_of([&] { are_isomorphic(a, a); }), ErrorKind::TooLarge);
}

TEST(Network, SubnetworkAndPermute) {
  const auto g = testutil::gamma(3);
  const auto sub = subnetwork(g, {1, 2});
  EXPECT_EQ(sub.size(), 2u);
  EXPECT_EQ(sub(0, 1), 11.0);
  EXPECT_EQ(sub.labels(), (std::vector<std::string>{"b", "c"}));
  const auto p = permute(g, {2, 0, 1});
  EXPECT_EQ(p(0, 1), 3.0);
  EXPECT_EQ(p(0, 2), 11.0);
}

TEST(Rng, DeterministicAndInRange) {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    EXPECT_EQ(u, b.uniform());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(a.below(7), 7u);
    b.below(7);
  }
  EXPECT_NE(derive_seed(1, 2), derive_seed(2, 1));
  EXPECT_EQ(derive_seed(9, 3, 4), derive_seed(9, 3, 4));
}

TEST(Rng, SplitMixReferenceValue) {
  // First output of SplitMix64 seeded with 0.
  SplitMix64 r(0);
  EXPECT_EQ(r.next(), 0xE220A8397B1DCDAFULL);
}
