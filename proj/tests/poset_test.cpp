#include <gtest/gtest.h>

#include "oracles.hpp"
#include "satorder/generators.hpp"
#include "satorder/poset.hpp"
#include "satorder/verify.hpp"

using namespace satorder;

namespace {

void expect_order_axioms(const Poset& P) {
  const auto n = P.size();
  for (ElementId p = 0; p < n; ++p) {
    EXPECT_TRUE(P.leq(p, p));
    for (ElementId q = 0; q < n; ++q) {
      if (p != q) {
        EXPECT_FALSE(P.leq(p, q) && P.leq(q, p));
      }
      for (ElementId r = 0; r < n; ++r)
        if (P.leq(p, q) && P.leq(q, r)) {
          EXPECT_TRUE(P.leq(p, r));
        }
    }
  }
}

}  // namespace

TEST(PosetTest, FromStrictPairsKeepsTransitiveInput) {
  const auto tpt = Poset::from_strict_pairs(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(tpt.strict_pairs(), (std::vector<StrictPair>{{0, 1}, {2, 3}}));
  EXPECT_EQ(tpt, gen::two_plus_two());
}

TEST(PosetTest, FromStrictPairsClosesTransitively) {
  const auto chain = Poset::from_strict_pairs(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(chain.leq(0, 2));
  EXPECT_EQ(chain.strict_pairs(), (std::vector<StrictPair>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(PosetTest, CyclesAreRejected) {
  try {
    Poset::from_strict_pairs(2, {{0, 1}, {1, 0}});
    FAIL() << "expected CycleDetected";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::cycle_detected);
  }
  EXPECT_THROW(Poset::from_strict_pairs(3, {{0, 1}, {1, 2}, {2, 0}}), error);
  EXPECT_THROW(Poset::from_strict_pairs(1, {{0, 0}}), error);
}

TEST(PosetTest, OutOfRangePairsAreRejected) {
  try {
    Poset::from_strict_pairs(2, {{0, 2}});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::invalid_element);
  }
}

TEST(PosetTest, RelationQueries) {
  const auto chain3 = gen::chain(3);
  const auto tpt = gen::two_plus_two();
  EXPECT_TRUE(chain3.leq(0, 2));
  EXPECT_FALSE(tpt.leq(0, 3));
  for (ElementId p = 0; p < 4; ++p) EXPECT_TRUE(tpt.leq(p, p));

  EXPECT_FALSE(tpt.comparable(1, 2));
  EXPECT_TRUE(tpt.comparable(2, 3));
  for (ElementId p = 0; p < 3; ++p)
    for (ElementId q = 0; q < 3; ++q) EXPECT_TRUE(chain3.comparable(p, q));

  EXPECT_EQ(chain3.strict_downset(2), (std::vector<ElementId>{0, 1}));
  EXPECT_EQ(tpt.strict_downset(1), (std::vector<ElementId>{0}));
  EXPECT_TRUE(gen::antichain(2).strict_downset(0).empty());
}

TEST(PosetTest, HasseEdges) {
  EXPECT_EQ(gen::chain(3).hasse_edges(), (std::vector<StrictPair>{{0, 1}, {1, 2}}));
  EXPECT_EQ(gen::two_plus_two().hasse_edges(), (std::vector<StrictPair>{{0, 1}, {2, 3}}));

  const gen::Figure1Layout at{1};
  const auto edges = gen::figure1_truncation(1).hasse_edges();
  auto has = [&](ElementId a, ElementId b) {
    return std::find(edges.begin(), edges.end(), StrictPair{a, b}) != edges.end();
  };
  EXPECT_TRUE(has(at.r_(0), at.r()));
  EXPECT_TRUE(has(at.r(), at.t_(0)));
}

TEST(PosetTest, FindTwoTwo) {
  EXPECT_EQ(find_two_two(gen::two_plus_two()), (TwoTwoWitness{0, 1, 2, 3}));
  EXPECT_FALSE(find_two_two(gen::n_poset()).has_value());
  EXPECT_FALSE(find_two_two(gen::chain(3)).has_value());
  // topped_two_two keeps its 2+2 on the first four elements.
  EXPECT_EQ(find_two_two(gen::topped_two_two()), (TwoTwoWitness{0, 1, 2, 3}));
}

TEST(PosetTest, FindTwoTwoMatchesQuadrupleOracle) {
  for (std::size_t n = 0; n <= 6; ++n)
    verify::for_each_poset(n, [](const Poset& P) {
      EXPECT_EQ(!find_two_two(P).has_value(), oracle::two_two_free(P));
      if (auto w = find_two_two(P)) {
        EXPECT_TRUE(P.less(w->p0, w->p1));
        EXPECT_TRUE(P.less(w->p2, w->p3));
        EXPECT_FALSE(P.leq(w->p0, w->p3));
        EXPECT_FALSE(P.leq(w->p2, w->p1));
      }
    });
}

TEST(PosetTest, GeneratorsSatisfyOrderAxioms) {
  expect_order_axioms(gen::chain(5));
  expect_order_axioms(gen::antichain(4));
  expect_order_axioms(gen::topped_two_two());
  for (std::size_t k = 1; k <= 4; ++k) expect_order_axioms(gen::figure1_truncation(k));
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    expect_order_axioms(gen::random(9, 0.3, seed));
}

TEST(PosetTest, HasseEdgesReconstructRelation) {
  for (std::size_t n = 0; n <= 5; ++n)
    verify::for_each_poset(n, [](const Poset& P) {
      EXPECT_EQ(Poset::from_strict_pairs(P.size(), P.hasse_edges()), P);
    });
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto P = gen::random(10, 0.25, seed);
    EXPECT_EQ(Poset::from_strict_pairs(P.size(), P.hasse_edges()), P);
  }
}

TEST(PosetTest, TopologicalOrderIsLinearExtension) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto P = gen::random(8, 0.4, seed);
    const auto order = P.linear_extension();
    ASSERT_EQ(order.size(), P.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j) EXPECT_FALSE(P.less(order[j], order[i]));
  }
  const auto reversed = Poset::from_strict_pairs(3, {{2, 1}, {1, 0}});
  EXPECT_EQ(reversed.linear_extension(), (std::vector<ElementId>{2, 1, 0}));
}

TEST(GeneratorTest, Figure1Truncation) {
  const auto f1 = gen::figure1_truncation(1);
  const gen::Figure1Layout at1{1};
  EXPECT_EQ(f1.size(), 5u);
  const auto expected = Poset::from_strict_pairs(
      5, {{at1.l_(0), at1.l()}, {at1.r_(0), at1.r()}, {at1.r(), at1.t_(0)}, {at1.l_(0), at1.t_(0)}});
  EXPECT_EQ(f1, expected);

  for (std::size_t k = 1; k <= 5; ++k) {
    const auto P = gen::figure1_truncation(k);
    const gen::Figure1Layout at{k};
    EXPECT_EQ(P.size(), 3 * k + 2);
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_FALSE(P.leq(at.l(), at.t_(i)));
      EXPECT_FALSE(P.leq(at.t_(i), at.l()));
      EXPECT_TRUE(P.less(at.l_(i), at.t_(i)));
      EXPECT_TRUE(P.less(at.r(), at.t_(i)));
      for (std::size_t j = i + 1; j < k; ++j) {
        EXPECT_TRUE(P.less(at.l_(i), at.l_(j)));
        EXPECT_TRUE(P.less(at.r_(i), at.r_(j)));
        EXPECT_TRUE(P.less(at.t_(i), at.t_(j)));
        EXPECT_FALSE(P.leq(at.l_(j), at.t_(i)));
      }
    }
  }
  EXPECT_THROW(gen::figure1_truncation(0), error);
}

TEST(GeneratorTest, NamedFixtures) {
  const auto np = gen::n_poset();
  EXPECT_EQ(np.strict_pairs(), (std::vector<StrictPair>{{0, 1}, {2, 1}, {2, 3}}));
  const auto topped = gen::topped_two_two();
  EXPECT_EQ(topped.size(), 5u);
  EXPECT_TRUE(topped.less(0, 4));
  EXPECT_EQ(topped.strict_pairs(),
            (std::vector<StrictPair>{{0, 1}, {0, 4}, {1, 4}, {2, 3}, {2, 4}}));
}

TEST(GeneratorTest, RandomIsDeterministicPerSeed) {
  EXPECT_EQ(gen::random(5, 0.3, 1), gen::random(5, 0.3, 1));
  EXPECT_EQ(gen::random(0, 0.5, 3).size(), 0u);
  EXPECT_EQ(gen::random(6, 0.0, 9), gen::antichain(6));
  EXPECT_EQ(gen::random(6, 1.0, 9), gen::chain(6));
  bool differs = false;
  for (std::uint64_t seed = 2; seed < 20 && !differs; ++seed)
    differs = gen::random(8, 0.5, 1) != gen::random(8, 0.5, seed);
  EXPECT_TRUE(differs);
}
