#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "helpers.hpp"

using namespace cotor;
using testing_util::random_mor;
using testing_util::random_obj;

namespace {

// Random invertible change of basis that respects the vertex grading.
F2Matrix graded_change(std::mt19937_64& rng, const RawModule& mod) {
  const std::size_t d = mod.dim();
  while (true) {
    F2Matrix p(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        if (mod.deg[r] == mod.deg[c] && (rng() & 1u)) p.set(r, c);
      }
    }
    if (f2::rank(p) == d) return p;
  }
}

std::map<std::pair<int, int>, int> count_blocks(const std::vector<std::pair<int, int>>& blocks) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& b : blocks) ++out[b];
  return out;
}

}  // namespace

TEST(RawModules, HomBasisMatchesExhaustiveSearch) {
  const int m = 2;
  std::vector<RawModule> mods;
  for (int top = 0; top < m; ++top) {
    for (int len = 1; len <= 3; ++len) mods.push_back(uniserial(m, top, len));
  }
  for (const auto& a : mods) {
    for (const auto& b : mods) {
      const std::size_t cells = a.dim() * b.dim();
      std::size_t count = 0;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
        F2Matrix phi(b.dim(), a.dim());
        for (std::size_t k = 0; k < cells; ++k) {
          if ((bits >> k) & 1u) phi.set(k / a.dim(), k % a.dim());
        }
        count += is_module_map(a, b, phi);
      }
      const auto basis = raw_hom_basis(a, b);
      EXPECT_EQ(count, std::size_t{1} << basis.size());
      for (const auto& phi : basis) EXPECT_TRUE(is_module_map(a, b, phi));
    }
  }
}

TEST(RawModules, JordanAndRankDecompositionsRecoverHiddenSummands) {
  std::mt19937_64 rng(21);
  for (const auto& [m, n] : testing_util::nakayama_instances()) {
    for (int t = 0; t < 15; ++t) {
      std::vector<std::pair<int, int>> truth;
      std::vector<RawModule> parts;
      const int count = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < count; ++k) {
        const int top = static_cast<int>(rng() % m), len = 1 + static_cast<int>(rng() % n);
        truth.emplace_back(top, len);
        parts.push_back(uniserial(m, top, len));
      }
      RawModule mod = raw_sum(parts);
      const F2Matrix p = graded_change(rng, mod);
      mod.x = p * mod.x * *f2::inverse(p);

      const auto want = count_blocks(truth);
      const JordanDecomposition j = jordan_decompose(mod, m, n);
      EXPECT_EQ(count_blocks(j.blocks), want);
      std::vector<RawModule> blocks;
      for (const auto& [top, len] : j.blocks) blocks.push_back(uniserial(m, top, len));
      const auto inv = f2::inverse(j.basis);
      ASSERT_TRUE(inv.has_value());
      EXPECT_EQ((*inv * mod.x * j.basis).flatten(), raw_sum(blocks).x.flatten());
      EXPECT_EQ(rank_decompose(mod, m, n).multiplicity, want);
    }
  }
}

TEST(Nakayama, IndecomposableCountsAndLabels) {
  for (const auto& [m, n] : testing_util::nakayama_instances()) {
    const Nakayama cat({m, n});
    EXPECT_EQ(cat.size(), m * (n - 1));
    for (int i = 0; i < cat.size(); ++i) EXPECT_EQ(parse_label(cat, cat.label(i)), i);
  }
  EXPECT_THROW(Nakayama({0, 2}), InputError);
  EXPECT_THROW(Nakayama({5, 6}), InputError);
}

TEST(Nakayama, KnownShifts) {
  const Nakayama a({1, 3});
  EXPECT_EQ(a.shift_indec(parse_label(a, "S0"), 1), parse_label(a, "M(0,2)"));
  const Nakayama b({2, 2});
  EXPECT_EQ(b.shift_indec(parse_label(b, "S0"), 1), parse_label(b, "S1"));
  const Nakayama c({3, 2});
  EXPECT_EQ(c.shift_indec(parse_label(c, "S0"), 1), parse_label(c, "S2"));
  for (const auto& [m, n] : testing_util::nakayama_instances()) {
    const Nakayama cat({m, n});
    std::vector<int> image;
    for (int i = 0; i < cat.size(); ++i) {
      EXPECT_EQ(cat.shift_indec(cat.shift_indec(i, 1), -1), i);
      image.push_back(cat.shift_indec(i, 1));
    }
    std::sort(image.begin(), image.end());
    EXPECT_TRUE(std::adjacent_find(image.begin(), image.end()) == image.end());
  }
}

TEST(Nakayama, StableHomDimensionsForOneVertex) {
  for (int n = 3; n <= 6; ++n) {
    const Nakayama cat({1, n});
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        EXPECT_EQ(cat.hom_dim_indec(cat.id_of(0, i), cat.id_of(0, j)),
                  static_cast<std::size_t>(std::min({i, j, n - i, n - j})))
            << "n=" << n << " lengths " << i << "," << j;
      }
    }
  }
}

TEST(Nakayama, StableHomIsRawModuloProjectiveFactoring) {
  for (const auto& [m, n] : testing_util::nakayama_instances()) {
    const Nakayama cat({m, n});
    for (int a = 0; a < cat.size(); ++a) {
      for (int b = 0; b < cat.size(); ++b) {
        const auto e = cat.stable_hom_entry(a, b);
        EXPECT_EQ(e.raw_dim, raw_hom_basis(cat.module_of(a), cat.module_of(b)).size());
        EXPECT_EQ(e.stable_dim, e.raw_dim - e.projective_dim);
        EXPECT_EQ(e.stable_dim, cat.hom_dim_indec(a, b));
      }
    }
  }
}

class Triangles : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(Triangles, ConeOfIdentityAndOfZero) {
  const Nakayama cat({GetParam().first, GetParam().second});
  for (int a = 0; a < cat.size(); ++a) {
    EXPECT_TRUE(cat.cone(identity(cat, Obj::of(a))).c.empty());
    for (int b = 0; b < cat.size(); ++b) {
      const Tri t = cat.cone(zero_mor(cat, Obj::of(a), Obj::of(b)));
      EXPECT_EQ(t.c, Obj::of(b) + shift_obj(cat, Obj::of(a), 1));
    }
  }
}

TEST_P(Triangles, EmittedTrianglesAreExact) {
  const Nakayama cat({GetParam().first, GetParam().second});
  std::mt19937_64 rng(22);
  for (int t = 0; t < 30; ++t) {
    const Obj x = random_obj(cat, rng, 2), y = random_obj(cat, rng, 2);
    const Tri tri = cat.cone(random_mor(cat, rng, x, y));
    EXPECT_TRUE(composites_vanish(cat, tri));
    const Tri r = rotate(cat, tri);
    for (int w = 0; w < cat.size(); ++w) {
      const Obj ow = Obj::of(w);
      EXPECT_TRUE(testing_util::hom_exact_at_middle(cat, ow, tri.f, tri.g));
      EXPECT_TRUE(testing_util::hom_exact_at_middle(cat, ow, tri.g, tri.h));
      EXPECT_TRUE(testing_util::hom_exact_at_middle(cat, ow, r.g, r.h));
    }
  }
}

TEST_P(Triangles, ConeOfAnAutomorphismVanishes) {
  const Nakayama cat({GetParam().first, GetParam().second});
  std::mt19937_64 rng(23);
  int found = 0;
  for (int t = 0; t < 200 && found < 10; ++t) {
    const Obj x = random_obj(cat, rng, 2);
    const Mor f = random_mor(cat, rng, x, x);
    if (!is_isomorphism(cat, f)) continue;
    ++found;
    EXPECT_TRUE(cat.cone(f).c.empty());
  }
  EXPECT_GT(found, 0);
}

INSTANTIATE_TEST_SUITE_P(Nakayama, Triangles, ::testing::ValuesIn(testing_util::nakayama_instances()));
