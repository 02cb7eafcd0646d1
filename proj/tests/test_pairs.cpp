#include <gtest/gtest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace cotor;
using oracles::brute_force_pairs;


class PairsOnNakayama : public ::testing::TestWithParam<std::pair<int, int>> {
 protected:
  PairsOnNakayama() : cat({GetParam().first, GetParam().second}), star(cat, 4), engine(star) {}
  Nakayama cat;
  StarOracle<Nakayama> star;
  PairEngine<Nakayama> engine;
};

TEST_P(PairsOnNakayama, EnumerationMatchesBruteForce) {
  const CotorsionList list = engine.enumerate_cotorsion(1);
  ASSERT_TRUE(list.complete);
  EXPECT_EQ(list.pairs, brute_force_pairs(cat));
  EXPECT_EQ(engine.enumerate_cotorsion(2).pairs, list.pairs);
}

TEST_P(PairsOnNakayama, EveryPairSatisfiesDualityAndTrivialPairsAreTStructures) {
  const auto pairs = engine.enumerate_cotorsion().pairs;
  const Subcat all = Subcat::all(cat.size());
  EXPECT_NE(std::find(pairs.begin(), pairs.end(), CotorsionPair{all, Subcat{}}), pairs.end());
  EXPECT_NE(std::find(pairs.begin(), pairs.end(), CotorsionPair{Subcat{}, all}), pairs.end());
  for (const auto& p : pairs) {
    EXPECT_TRUE(satisfies_duality(cat, p));
    const PairFlags f = classify(cat, p);
    if (p.u.empty() || p.u == all) {
      EXPECT_TRUE(f.t_structure && f.co_t_structure);
    }
    EXPECT_EQ(f.cluster_tilting, p.u == p.v);
  }
}

TEST_P(PairsOnNakayama, TwinPairsAreExactlyExtOrthogonalCombinations) {
  const auto pairs = engine.enumerate_cotorsion().pairs;
  std::vector<TwinPair> want;
  for (const auto& a : pairs) {
    for (const auto& b : pairs) {
      bool ok = true;
      for (int s : a.u.members()) {
        for (int v : b.v.members()) ok = ok && cat.hom_dim_indec(s, cat.shift_indec(v, 1)) == 0;
      }
      if (ok) want.push_back({a, b});
    }
  }
  std::sort(want.begin(), want.end());
  const auto tcps = enumerate_tcps(cat, pairs);
  EXPECT_EQ(tcps, want);
  for (const auto& p : tcps) {
    // S ⊆ U and V ⊆ T follow from Ext¹(S,V) = 0.
    EXPECT_TRUE(p.s().subset_of(p.u()));
    EXPECT_TRUE(p.v().subset_of(p.t()));
    EXPECT_TRUE(classify(degenerate(p.inner)).degenerate);
  }
}

TEST_P(PairsOnNakayama, ConcentricIdentities) {
  const auto tcps = enumerate_tcps(cat, engine.enumerate_cotorsion().pairs);
  for (const auto& p : tcps) {
    if (!p.concentric()) {
      EXPECT_THROW(engine.derived_sets(p), InputError);
      continue;
    }
    const DerivedSets d = engine.derived_sets(p);
    ASSERT_TRUE(d.complete);
    EXPECT_TRUE(d.remark_holds);
    EXPECT_TRUE(d.i.subset_of(d.z));
    EXPECT_TRUE(d.i.subset_of(d.ni) && d.i.subset_of(d.nf));
    const HoveyReport h = engine.is_hovey(p);
    const Verdict ii = engine.check_condition_II(p), iii = engine.check_condition_III(p);
    ASSERT_NE(h.verdict, Verdict::inconclusive);
    ASSERT_NE(ii, Verdict::inconclusive);
    ASSERT_NE(iii, Verdict::inconclusive);
    EXPECT_EQ(h.verdict == Verdict::yes, ii == Verdict::yes);
    EXPECT_EQ(ii, iii);
    if (h.verdict == Verdict::yes) {
      EXPECT_TRUE(h.shift_closed);
      EXPECT_EQ(h.extension_closed, Verdict::yes);
      EXPECT_EQ(h.summand_closed, Verdict::yes);
      EXPECT_TRUE(h.perp_identities);
    }
  }
}

TEST_P(PairsOnNakayama, HVanishesOnTheConstituents) {
  for (const auto& p : engine.enumerate_cotorsion().pairs) {
    for (int x : p.u.members()) EXPECT_EQ(engine.h_vanishes(Obj::of(x), p), Verdict::yes);
    for (int x : p.v.members()) EXPECT_EQ(engine.h_vanishes(Obj::of(x), p), Verdict::yes);
    for (int x = 0; x < cat.size(); ++x) EXPECT_NE(engine.h_vanishes(Obj::of(x), p), Verdict::inconclusive);
  }
}

TEST_P(PairsOnNakayama, TrivialTwinPairIsHovey) {
  const TwinPair p = trivial_hovey(cat);
  ASSERT_TRUE(p.concentric());
  const HoveyReport h = engine.is_hovey(p);
  EXPECT_EQ(h.verdict, Verdict::yes);
  EXPECT_TRUE(h.n.empty());
  EXPECT_EQ(engine.check_condition_II(p), Verdict::yes);
  EXPECT_EQ(engine.check_condition_III(p), Verdict::yes);
}

INSTANTIATE_TEST_SUITE_P(Nakayama, PairsOnNakayama, ::testing::ValuesIn(testing_util::nakayama_instances()));

TEST(Pairs, SmallCounts) {
  struct Row {
    int m, n;
    std::size_t cps, cluster_tilting;
  };
  for (const Row r : {Row{1, 3, 2, 0}, Row{2, 2, 4, 2}, Row{1, 4, 2, 0}}) {
    const Nakayama cat({r.m, r.n});
    const auto pairs = brute_force_pairs(cat);
    EXPECT_EQ(pairs.size(), r.cps);
    std::size_t ct = 0;
    for (const auto& p : pairs) ct += p.u == p.v;
    EXPECT_EQ(ct, r.cluster_tilting);
  }
}

TEST(Pairs, NonCotorsionPairIsRejected) {
  const Nakayama cat({2, 2});
  const StarOracle<Nakayama> star(cat, 4);
  const PairEngine<Nakayama> engine(star);
  const int s0 = parse_label(cat, "S0"), s1 = parse_label(cat, "S1");
  EXPECT_EQ(engine.is_cotorsion_pair({Subcat::of({s0}), Subcat::of({s0})}), Verdict::yes);
  EXPECT_EQ(engine.is_cotorsion_pair({Subcat::of({s0}), Subcat::of({s1})}), Verdict::no);
  EXPECT_EQ(engine.is_cotorsion_pair({Subcat::of({s0}), Subcat{}}), Verdict::no);
}
