#include <gtest/gtest.h>

#include <regex>

#include "helpers.hpp"

using namespace cotor;

class Mutation : public ::testing::TestWithParam<std::pair<int, int>> {
 protected:
  Mutation() : cat({GetParam().first, GetParam().second}), lab(cat, 4) {}
  Nakayama cat;
  Lab<Nakayama> lab;
};

TEST_P(Mutation, TrivialPairMutatesByTheShift) {
  const TwinPair p = trivial_hovey(cat);
  const auto me = lab.mutation(p);
  const auto& cps = lab.cotorsion().pairs;
  EXPECT_EQ(me.enumerate_MP(), cps);
  for (const auto& ab : cps) {
    EXPECT_EQ(me.R_map(ab), (ZICotorsionPair{ab.u, ab.v}));
    EXPECT_EQ(me.I_map({ab.u, ab.v}), ab);
    for (int k = -2; k <= 2; ++k) {
      const CotorsionPair want{shift_subcat(cat, ab.u, k), shift_subcat(cat, ab.v, k)};
      EXPECT_EQ(me.mutate(ab, k), want);
    }
  }
  // Pairs of the quotient, found through standard triangles, are those of the category.
  std::vector<ZICotorsionPair> want;
  for (const auto& ab : cps) want.push_back({ab.u, ab.v});
  const auto zl = me.enumerate_cp_zi();
  EXPECT_TRUE(zl.complete);
  EXPECT_EQ(zl.pairs, want);
}

TEST_P(Mutation, DegeneratePairHasOneMutablePair) {
  for (const auto& cp : lab.cotorsion().pairs) {
    const auto me = lab.mutation(degenerate(cp));
    EXPECT_EQ(me.enumerate_MP(), std::vector<CotorsionPair>{cp});
    EXPECT_EQ(me.mutate(cp, 1), cp);
  }
}

TEST_P(Mutation, ConstituentsAreMutableAndBijectionHolds) {
  int checked = 0;
  for (const auto& p : lab.concentric()) {
    if (!lab.satisfies_I_II(p)) continue;
    ++checked;
    const auto me = lab.mutation(p);
    EXPECT_EQ(me.in_MP(p.inner), Verdict::yes);
    EXPECT_EQ(me.in_MP(p.outer), Verdict::yes);
    EXPECT_EQ(me.I_map(me.R_map(p.inner)), p.inner);
    EXPECT_EQ(me.I_map(me.R_map(p.outer)), p.outer);
    const BijectionReport rep = me.verify_bijection();
    EXPECT_EQ(rep.verdict, Verdict::yes) << lab.name(p);
    EXPECT_EQ(rep.mutable_pairs.size(), rep.zi_pairs.size());
    for (const auto& c : rep.counterexamples) ADD_FAILURE() << c;
    // Mutable pairs are sandwiched between the constituents.
    for (const auto& ab : rep.mutable_pairs) {
      EXPECT_TRUE(p.s().subset_of(ab.u) && ab.u.subset_of(p.u()));
      EXPECT_TRUE(p.v().subset_of(ab.v) && ab.v.subset_of(p.t()));
    }
  }
  EXPECT_GT(checked, 0);
}

TEST_P(Mutation, BijectionRefusesPairsOutsideItsHypotheses) {
  for (const auto& p : lab.concentric()) {
    if (lab.satisfies_I_II(p)) continue;
    EXPECT_THROW(lab.mutation(p).verify_bijection(), InputError);
  }
}

TEST_P(Mutation, OrbitGraphIsAFunctionalGraph) {
  const auto me = lab.mutation(trivial_hovey(cat));
  const std::string dot = me.orbit_graph();
  const std::size_t nodes = lab.cotorsion().pairs.size();
  const std::regex edge("n([0-9]+) -> n([0-9]+);");
  std::vector<int> out_degree(nodes, 0), in_degree(nodes, 0);
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge); it != std::sregex_iterator(); ++it) {
    ++out_degree.at(std::stoul((*it)[1]));
    ++in_degree.at(std::stoul((*it)[2]));
  }
  for (std::size_t i = 0; i < nodes; ++i) {
    EXPECT_EQ(out_degree[i], 1);
    EXPECT_EQ(in_degree[i], 1);  // μ₁ is invertible
  }
}

INSTANTIATE_TEST_SUITE_P(Nakayama, Mutation, ::testing::ValuesIn(testing_util::nakayama_instances()));

TEST(MutationExamples, TwoVertexOrbits) {
  const Nakayama cat({2, 2});
  const Lab<Nakayama> lab(cat, 4);
  const auto me = lab.mutation(trivial_hovey(cat));
  const int s0 = parse_label(cat, "S0"), s1 = parse_label(cat, "S1");
  const CotorsionPair a{Subcat::of({s0}), Subcat::of({s0})}, b{Subcat::of({s1}), Subcat::of({s1})};
  EXPECT_EQ(me.mutate(a, 1), b);
  EXPECT_EQ(me.mutate(b, 1), a);
  const Subcat all = Subcat::all(cat.size());
  EXPECT_EQ(me.mutate({all, Subcat{}}, 1), (CotorsionPair{all, Subcat{}}));
  EXPECT_EQ(me.mutate({Subcat{}, all}, 1), (CotorsionPair{Subcat{}, all}));
  const std::string dot = me.orbit_graph();
  EXPECT_NE(dot.find("digraph mutation"), std::string::npos);
  EXPECT_NE(dot.find("U=[S0];V=[S0]"), std::string::npos);
}
