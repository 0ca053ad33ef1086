#include <gtest/gtest.h>

#include "finito/canonical.hpp"
#include "finito/enumerate.hpp"
#include "finito/errors.hpp"
#include "finito/models.hpp"
#include "finito/order_complex.hpp"
#include "finito/pi1.hpp"
#include "finito/reduction.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace finito;

TEST(Suspension, Examples) {
  EXPECT_TRUE(is_homeomorphic(nh_suspension(FinitePoset::antichain(2)), sphere_model(1)));
  const auto s1 = nh_suspension(FinitePoset::chain(1));
  EXPECT_EQ(s1.size(), 3u);
  EXPECT_TRUE(is_contractible(s1));
  const auto y = nh_suspension(FinitePoset::antichain(3));
  EXPECT_TRUE(is_homeomorphic(y, finito::testing::osaki_y()));
  EXPECT_EQ(cover_count(y), 6u);
}

TEST(SphereModel, Shape) {
  EXPECT_TRUE(sphere_model(0).same_order(FinitePoset::antichain(2)));
  EXPECT_EQ(cover_count(sphere_model(1)), 4u);
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto s = sphere_model(n);
    EXPECT_EQ(s.size(), 2 * n + 2);
    EXPECT_EQ(height(s), n + 1);
    EXPECT_TRUE(beat_points(s).empty());
    EXPECT_EQ(euler_char(s), n % 2 == 0 ? 2 : 0);
    EXPECT_TRUE(is_homeomorphic(opposite(s), s));
    std::vector<std::size_t> expected(n + 1, 0);
    expected[0] += 1;
    expected[n] += 1;
    EXPECT_EQ(homology(order_complex(s)).betti, expected);
  }
  EXPECT_EQ(sphere_model(2).label(0), "a0");
}

TEST(Bipartite, Shape) {
  EXPECT_TRUE(is_homeomorphic(bipartite_model(2, 3), finito::testing::wedge_five()));
  EXPECT_TRUE(is_contractible(bipartite_model(1, 1)));
  const auto b = bipartite_model(2, 4);
  EXPECT_EQ(b.size(), 6u);
  EXPECT_EQ(cover_count(b), 8u);
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = 1; j <= 4; ++j) {
      const auto p = bipartite_model(i, j);
      EXPECT_EQ(cover_count(p), i * j);
      EXPECT_EQ(first_betti(p), (i - 1) * (j - 1));
      if (i + j >= 2) EXPECT_EQ(height(p), 2u);
    }
  }
}

TEST(WedgeSize, DirectAndClosedForm) {
  EXPECT_EQ(minimal_wedge_size(1), 4u);
  EXPECT_EQ(minimal_wedge_size(3), 6u);
  EXPECT_EQ(minimal_wedge_size(4), 6u);
  for (std::size_t n = 1; n <= 2000; ++n) {
    // Independent brute force over (i, j).
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 1; i <= n + 2; ++i) {
      for (std::size_t j = 1; j <= n + 2; ++j) {
        if ((i - 1) * (j - 1) >= n) best = std::min(best, i + j);
      }
    }
    ASSERT_EQ(minimal_wedge_size(n), best) << n;
    ASSERT_EQ(minimal_wedge_size_closed_form(n), best) << n;
  }
  EXPECT_EQ(ceil_sqrt(0), 0u);
  EXPECT_EQ(ceil_sqrt(16), 4u);
  EXPECT_EQ(ceil_sqrt(17), 5u);
}

TEST(WedgeCertificate, Examples) {
  const auto c = check_wedge_model(bipartite_model(2, 4), 3);
  EXPECT_TRUE(c.satisfied());
  EXPECT_TRUE(c.consistent());
  EXPECT_TRUE(check_wedge_model(sphere_model(1), 1).satisfied());
  const auto d = check_wedge_model(bipartite_model(3, 3), 3);
  EXPECT_TRUE(d.size_ok);
  EXPECT_FALSE(d.edges_ok);
  EXPECT_EQ(d.b1, 4u);
}

TEST(Enumeration, CountsAndOracle) {
  const std::vector<std::size_t> expected{1, 2, 5, 16, 63, 318, 2045, 16999};
  PosetCatalog catalog;
  for (std::size_t k = 1; k <= 8; ++k) EXPECT_EQ(catalog.level(k).size(), expected[k - 1]);
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(oracle::count_unlabeled_posets(k), expected[k - 1]);
  EXPECT_THROW(catalog.level(9), CapExceededError);
  PosetCatalog big({12, 1});
  EXPECT_EQ(big.cap(), kHardEnumerationCap);
}

TEST(Enumeration, TwoPoints) {
  const auto two = enumerate_posets(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_TRUE((is_homeomorphic(two[0], FinitePoset::chain(2)) &&
               is_homeomorphic(two[1], FinitePoset::antichain(2))) ||
              (is_homeomorphic(two[1], FinitePoset::chain(2)) &&
               is_homeomorphic(two[0], FinitePoset::antichain(2))));
}

TEST(Enumeration, RepresentativesAreCanonicalAndDistinct) {
  PosetCatalog catalog;
  for (std::size_t k = 1; k <= 7; ++k) {
    const auto& level = catalog.level(k);
    const auto& codes = catalog.codes(k);
    for (std::size_t i = 0; i < level.size(); ++i) {
      EXPECT_EQ(canonical_form(level[i]), codes[i]);
      if (i > 0) EXPECT_LT(codes[i - 1], codes[i]);
    }
  }
}

TEST(Enumeration, SerialAndParallelAgree) {
  PosetCatalog serial({8, 1});
  PosetCatalog parallel({8, 4});
  for (std::size_t k = 6; k <= 8; ++k) EXPECT_EQ(serial.codes(k), parallel.codes(k));
}

TEST(Enumeration, DownSets) {
  EXPECT_EQ(down_set_masks(FinitePoset::chain(3)).size(), 4u);
  EXPECT_EQ(down_set_masks(FinitePoset::antichain(3)).size(), 8u);
}

TEST(WedgeModels, SmallCases) {
  PosetCatalog catalog;
  const auto one = enumerate_wedge_minimal_models(1, catalog);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(is_homeomorphic(one[0], sphere_model(1)));
  const auto two = enumerate_wedge_minimal_models(2, catalog);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_TRUE(is_homeomorphic(two[0], opposite(two[1])));
  const auto three = enumerate_wedge_minimal_models(3, catalog);
  ASSERT_EQ(three.size(), 3u);
  for (const auto& m : three) {
    EXPECT_EQ(m.size(), 6u);
    EXPECT_EQ(cover_count(m), 8u);
    EXPECT_TRUE(beat_points(m).empty());
  }
  EXPECT_EQ(enumerate_wedge_minimal_models(4, catalog).size(), 1u);
  EXPECT_THROW(enumerate_wedge_minimal_models(10, catalog), CapExceededError);
}

TEST(WedgeModels, Scan) {
  PosetCatalog catalog;
  const auto rows = wedge_uniqueness_scan(12, catalog);
  ASSERT_EQ(rows.size(), 12u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.ok()) << r.n;
    EXPECT_EQ(r.size, r.closed_form);
    if (r.within_cap) {
      EXPECT_TRUE(r.closed_under_opposite);
      EXPECT_EQ(r.models == 1, r.square) << r.n;
    }
  }
}

TEST(SphereTheorem, SmallHeights) {
  PosetCatalog catalog;
  for (std::size_t h = 2; h <= 3; ++h) {
    const auto r = verify_sphere_theorem(h, catalog);
    EXPECT_TRUE(r.confirmed());
    EXPECT_EQ(r.equality_classes.at(h), 1u);
  }
}
