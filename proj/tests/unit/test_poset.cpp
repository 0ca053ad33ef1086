#include <gtest/gtest.h>

#include <random>

#include "finito/errors.hpp"
#include "finito/poset.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace finito;
using finito::testing::index_of;

TEST(Poset, FromRelationRejectsNonOrders) {
  EXPECT_THROW(FinitePoset::from_relation(2, [](Element, Element) { return true; }),
               NotPartialOrderError);
  EXPECT_THROW(FinitePoset::from_relation(2, [](Element a, Element b) { return a != b; }),
               NotPartialOrderError);
  // 0 < 1 < 2 without 0 < 2.
  EXPECT_THROW(FinitePoset::from_relation(
                   3, [](Element a, Element b) { return a == b || b == a + 1; }),
               NotPartialOrderError);
}

TEST(Poset, CoversCycleIsRejected) {
  HasseDiagram h{3, {{0, 1}, {1, 2}, {2, 0}}, {}};
  EXPECT_THROW(from_covers(h), CycleError);
}

TEST(Poset, FourPointExampleOpenSets) {
  const auto p = finito::testing::four_point_example();
  const Element a = index_of(p, "a"), b = index_of(p, "b"), c = index_of(p, "c"),
                d = index_of(p, "d");
  EXPECT_EQ(min_open(p, a).size(), 4u);
  EXPECT_EQ(min_open(p, b), (ElementSet{std::min(b, d), std::max(b, d)}));
  EXPECT_EQ(min_open(p, c), ElementSet{c});
  EXPECT_EQ(min_open(p, d), ElementSet{d});
  EXPECT_EQ(height(p), 3u);
  EXPECT_EQ(cover_count(p), 3u);
  EXPECT_TRUE(is_connected(p));
}

TEST(Poset, ChainAndAntichain) {
  const auto c = FinitePoset::chain(4);
  EXPECT_EQ(height(c), 4u);
  EXPECT_EQ(cover_count(c), 3u);
  const auto a = FinitePoset::antichain(4);
  EXPECT_EQ(height(a), 1u);
  EXPECT_EQ(connected_components(a).size(), 4u);
}

TEST(Poset, OppositeIsInvolution) {
  const auto p = finito::testing::osaki_x();
  EXPECT_TRUE(opposite(opposite(p)).same_order(p));
  for (Element x = 0; x < p.size(); ++x) {
    EXPECT_EQ(min_open(p, x), closure(opposite(p), x));
  }
}

TEST(Poset, ChainsMatchSubsetOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    // Random order: i < j allowed only for i < j, then transitive closure.
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (Element i = 0; i < n; ++i) {
      r[i][i] = true;
      for (Element j = i + 1; j < n; ++j) r[i][j] = rng() % 3 == 0;
    }
    for (Element k = 0; k < n; ++k)
      for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j)
          if (r[i][k] && r[k][j]) r[i][j] = true;
    const auto p = FinitePoset::from_relation(n, [&](Element a, Element b) { return r[a][b]; });
    EXPECT_EQ(chains(p).size(), oracle::chain_count(p));
    EXPECT_EQ(height(p), oracle::height_by_subsets(p));
  }
}

TEST(Poset, HasseRoundTrip) {
  const auto p = finito::testing::osaki_x();
  EXPECT_TRUE(from_covers(hasse(p)).same_order(p));
  EXPECT_EQ(hasse(p).covers.size(), 7u);
}

TEST(Poset, SubspaceAndDisjointUnion) {
  const auto p = FinitePoset::chain(3);
  const std::vector<Element> keep{0, 2};
  const auto q = subspace(p, keep);
  EXPECT_TRUE(q.same_order(FinitePoset::chain(2)));
  const auto u = disjoint_union(p, q);
  EXPECT_EQ(u.size(), 5u);
  EXPECT_EQ(connected_components(u).size(), 2u);
}

TEST(Poset, CheckIndex) {
  EXPECT_THROW(FinitePoset::chain(2).check_index(2), IndexError);
}
