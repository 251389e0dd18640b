#include <gtest/gtest.h>

#include "support/helpers.hpp"

using namespace netmetric;
using BP = BarycentricPoint;

namespace {

std::size_t at(const SampledSpace& s, const std::string& label) {
  const auto& labels = s.labels();
  const auto it = std::find(labels.begin(), labels.end(), label);
  EXPECT_NE(it, labels.end()) << label;
  return static_cast<std::size_t>(it - labels.begin());
}

double r(const SampledSpace& s, const std::string& x, const std::string& y) { return s.dissim()(at(s, x), at(s, y)); }

std::vector<BP> one_thirds(std::size_t n, bool centroid) {
  std::vector<BP> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back(BP::mix(n, i, j, 1.0 / 3.0));
      out.push_back(BP::mix(n, i, j, 2.0 / 3.0));
    }
  if (centroid) out.push_back(BP(std::vector<double>(n, 1.0 / static_cast<double>(n))));
  return out;
}

Network two_node(double w) { return Network::validate(Matrix{{0, w}, {w, 0}}, {"u", "v"}); }

}  // namespace

TEST(InteriorDistance, FigureValues) {
  const auto g1 = testutil::gamma(1), g3 = testutil::gamma(3);
  EXPECT_NEAR(interior_distance(g1, BP::vertex(3, 0), BP::midpoint(3, 0, 1)), 0.5, 1e-12);
  EXPECT_NEAR(interior_distance(g1, BP::midpoint(3, 0, 2), BP::midpoint(3, 0, 1)), 5.5, 1e-12);
  EXPECT_NEAR(interior_distance(g3, BP::midpoint(3, 0, 2), BP::vertex(3, 1)), 7.0, 1e-12);
}

TEST(MidpointAugment, GammaOneSpace) {
  const auto s = midpoint_augment(testutil::gamma(1));
  EXPECT_EQ(s.size(), 6u);
  EXPECT_EQ(s.labels(), (std::vector<std::string>{"a", "b", "c", "mid(a,b)", "mid(a,c)", "mid(b,c)"}));
  EXPECT_NEAR(r(s, "c", "mid(b,c)"), 5.5, 1e-12);
  EXPECT_NEAR(r(s, "mid(a,c)", "mid(b,c)"), 0.5, 1e-12);
  EXPECT_NEAR(r(s, "mid(a,c)", "b"), 6.0, 1e-12);
}

TEST(MidpointAugment, TwoNodeAndRestriction) {
  const auto s = midpoint_augment(two_node(4));
  ASSERT_EQ(s.size(), 3u);
  EXPECT_NEAR(s.dissim()(0, 2), 2.0, 1e-12);
  EXPECT_NEAR(s.dissim()(2, 1), 2.0, 1e-12);

  SplitMix64 rng(8);
  const auto net = testutil::random_network(5, rng);
  const auto big = midpoint_augment(net);
  EXPECT_EQ(big.size(), 15u);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(big.dissim()(i, j), net(i, j));
  EXPECT_EQ(big.as_network().size(), 15u);
}

TEST(MidpointAugment, RejectsSingleNode) {
  try {
    midpoint_augment(Network::validate(Matrix{{0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidN);
  }
}

TEST(AugmentWith, Examples) {
  const auto g = testutil::gamma(2);
  const auto plain = augment_with(g, {});
  EXPECT_TRUE(are_isomorphic(plain.as_network(), g));

  const auto mids = augment_with(g, all_midpoints(3));
  const auto ref = midpoint_augment(g);
  EXPECT_EQ(mids.dissim(), ref.dissim());
  EXPECT_EQ(mids.labels(), ref.labels());

  const auto thirds = augment_with(g, one_thirds(3, true));
  EXPECT_EQ(thirds.size(), 10u);
}

TEST(AugmentWith, Errors) {
  const auto g = testutil::gamma(2);
  try {
    augment_with(g, {BP::vertex(2, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
  try {
    augment_with(g, {BP::midpoint(3, 0, 1), BP::midpoint(3, 1, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicatePoint);
  }
  try {
    augment_with(g, {BP::vertex(3, 1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicatePoint);
  }
}

TEST(Barycentric, Validation) {
  EXPECT_THROW(BP({0.5, 0.6}), Error);
  EXPECT_THROW(BP({-0.1, 1.1}), Error);
  EXPECT_THROW(BP(std::vector<double>{}), Error);
  EXPECT_NO_THROW(BP({0.5, 0.5 + 1e-10}));
  EXPECT_EQ(BP::vertex(3, 2).vertex_index(), 2u);
  EXPECT_FALSE(BP::midpoint(3, 0, 2).vertex_index());
}

TEST(PushForward, Examples) {
  SplitMix64 rng(4);
  const auto x = testutil::random_point(4, rng);
  EXPECT_LE(coord_distance(push_forward(NodeMapping::identity(4), x, 4), x), 1e-15);

  const NodeMapping phi{{0, 0, 1}};  // a->u, b->u, c->v
  EXPECT_EQ(push_forward(phi, BP::midpoint(3, 0, 1), 2), BP::vertex(2, 0));
  EXPECT_LE(coord_distance(push_forward(phi, BP::midpoint(3, 0, 2), 2), BP::midpoint(2, 0, 1)), 1e-15);
}

TEST(PushForward, MappedPointsNeverMoveFurtherInMass) {
  // Pushing forward cannot increase the mass that must move.
  SplitMix64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng.below(4), k = 1 + rng.below(4);
    NodeMapping phi;
    for (std::size_t i = 0; i < n; ++i) phi.assignment.push_back(rng.below(k));
    const auto p = testutil::random_point(n, rng), m = testutil::random_point(n, rng);
    const auto pp = push_forward(phi, p, k), mm = push_forward(phi, m, k);
    double a = 0, b = 0;
    for (std::size_t i = 0; i < n; ++i) a += std::abs(p[i] - m[i]);
    for (std::size_t i = 0; i < k; ++i) b += std::abs(pp[i] - mm[i]);
    EXPECT_LE(b, a + 1e-12);
  }
}

TEST(RegularPair, Examples) {
  SplitMix64 rng(12);
  for (std::size_t nx = 2; nx <= 4; ++nx)
    for (std::size_t ny = 2; ny <= 4; ++ny) {
      const auto qx = midpoint_augment(testutil::random_network(nx, rng));
      const auto qy = midpoint_augment(testutil::random_network(ny, rng));
      EXPECT_TRUE(is_regular_sample_pair(qx, qy)) << nx << "x" << ny;
    }

  const auto g = testutil::gamma(1);
  const auto centroid_only = augment_with(g, {BP({1.0 / 3, 1.0 / 3, 1.0 / 3})});
  EXPECT_FALSE(is_regular_sample_pair(centroid_only, midpoint_augment(two_node(1))));

  // The one-third space pairs with the one-third sample of an edge, with or
  // without the centroid; against the edge midpoint sample it does not.
  const auto thirds = augment_with(g, one_thirds(3, true));
  const auto thirds_no_q = augment_with(g, one_thirds(3, false));
  const auto edge_thirds = augment_with(two_node(1), one_thirds(2, false));
  EXPECT_TRUE(is_regular_sample_pair(thirds, edge_thirds));
  EXPECT_TRUE(is_regular_sample_pair(thirds_no_q, edge_thirds));
  EXPECT_FALSE(is_regular_sample_pair(thirds, midpoint_augment(two_node(1))));
}

TEST(RegularPair, Guard) {
  SplitMix64 rng(1);
  const auto big = midpoint_augment(testutil::random_network(6, rng));
  try {
    is_regular_sample_pair(big, big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(SampledSpace, AssembleChecksInvariants) {
  const auto s = midpoint_augment(testutil::gamma(1));
  auto bad = s.dissim();
  bad(0, 3) = 7.0;
  EXPECT_THROW(SampledSpace::assemble(s.base(), s.points(), s.labels(), bad), Error);
  auto pts = s.points();
  std::swap(pts[0], pts[1]);
  EXPECT_THROW(SampledSpace::assemble(s.base(), pts, s.labels(), s.dissim()), Error);
  EXPECT_NO_THROW(SampledSpace::assemble(s.base(), s.points(), s.labels(), s.dissim()));
  EXPECT_EQ(s.find(BP::midpoint(3, 1, 2)), 5u);
}
