#pragma once

// Brute-force reference computations shared by the unit and acceptance tests.
// They use only Hom dimensions, the shift and mapping cones of the backend.

#include <algorithm>
#include <bit>
#include <set>
#include <tuple>
#include <vector>

#include "cotor/cotor.hpp"

namespace oracles {

using namespace cotor;

inline std::uint64_t mask_of(const Obj& o) {
  std::uint64_t m = 0;
  for (int i : o) m |= std::uint64_t{1} << i;
  return m;
}

// Summand masks (X', Y', middle) of every triangle X' -> C -> Y' -> X'[1]
// obtained as a cone of Y'[-1] -> X', with X' and Y' of at most two summands.
inline std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> extension_records(const Nakayama& cat) {
  std::vector<Obj> objs;
  for (std::size_t s = 1; s <= 2; ++s) {
    for (const Obj& o : multisets_of_size(cat.size(), s)) objs.push_back(o);
  }
  std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> out;
  for (const Obj& xp : objs) {
    for (const Obj& yp : objs) {
      const Obj src = shift_obj(cat, yp, -1);
      const std::size_t d = hom_dim(cat, src, xp);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
        BitVec v(d);
        for (std::size_t i = 0; i < d; ++i) {
          if ((bits >> i) & 1u) v.set(i);
        }
        out.emplace(mask_of(xp), mask_of(yp), mask_of(cat.cone(Mor{src, xp, v}).c));
      }
    }
  }
  return out;
}

inline bool hom_zero(const Nakayama& cat, std::uint64_t a, std::uint64_t b, int shift_b) {
  for (int i = 0; i < cat.size(); ++i) {
    if (!((a >> i) & 1u)) continue;
    for (int j = 0; j < cat.size(); ++j) {
      if (((b >> j) & 1u) && cat.hom_dim_indec(i, cat.shift_indec(j, shift_b)) != 0) return false;
    }
  }
  return true;
}

// Pairs (U,V) with Hom(U, V[1]) = 0, U maximal for this against V and V
// maximal against U, and U closed under extensions.
inline std::vector<cotor::CotorsionPair> brute_force_pairs(const Nakayama& cat) {
  const auto records = extension_records(cat);
  const std::uint64_t total = std::uint64_t{1} << cat.size();
  std::vector<CotorsionPair> out;
  for (std::uint64_t u = 0; u < total; ++u) {
    for (std::uint64_t v = 0; v < total; ++v) {
      if (!hom_zero(cat, u, v, 1)) continue;
      bool maximal = true;
      for (int c = 0; c < cat.size() && maximal; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (!(u & bit) && hom_zero(cat, bit, v, 1)) maximal = false;
        if (!(v & bit) && hom_zero(cat, u, bit, 1)) maximal = false;
      }
      if (!maximal) continue;
      bool closed = true;
      for (const auto& [x, y, mid] : records) {
        if ((x & ~u) == 0 && (y & ~u) == 0 && (mid & ~u) != 0) {
          closed = false;
          break;
        }
      }
      if (closed) out.push_back({Subcat::from_bits(u), Subcat::from_bits(v)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}


// C is the middle term of the cone of some map Y'[-1] -> X' with X' in add X,
// Y' in add Y, each having at most two summands.
template <class B>
bool star_by_cones(const B& cat, const Subcat& x, const Subcat& y, const Obj& c) {
  std::vector<Obj> xs{Obj{}}, ys{Obj{}};
  for (std::size_t s = 1; s <= 2; ++s) {
    for (const Obj& o : multisets_of_size(cat.size(), s)) {
      if (x.contains(o)) xs.push_back(o);
      if (y.contains(o)) ys.push_back(o);
    }
  }
  for (const Obj& xp : xs) {
    for (const Obj& yp : ys) {
      const Obj src = shift_obj(cat, yp, -1);
      const std::size_t d = hom_dim(cat, src, xp);
      if (d > 16) continue;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
        BitVec v(d);
        for (std::size_t i = 0; i < d; ++i) {
          if ((bits >> i) & 1u) v.set(i);
        }
        if (cat.cone(Mor{src, xp, v}).c == c) return true;
      }
    }
  }
  return false;
}

// Arcs cross when exactly one endpoint of b lies strictly between the endpoints of a.
inline bool crosses(const Arc& a, const Arc& b) {
  auto inside = [&](int v) { return a.i < v && v < a.j; };
  if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) return false;
  return inside(b.i) != inside(b.j);
}

inline bool non_crossing(const PolygonCat& p, std::uint64_t bits) {
  for (int x = 0; x < p.size(); ++x) {
    for (int y = x + 1; y < p.size(); ++y) {
      if (((bits >> x) & 1u) && ((bits >> y) & 1u) && crosses(p.arc(x), p.arc(y))) return false;
    }
  }
  return true;
}

// (rigid sets, triangulations) by scanning every arc subset.
inline std::pair<std::size_t, std::size_t> polygon_counts(const PolygonCat& p) {
  std::size_t rigid = 0, max_size = 0, at_max = 0;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << p.size()); ++b) {
    if (!non_crossing(p, b)) continue;
    ++rigid;
    const auto k = static_cast<std::size_t>(std::popcount(b));
    if (k > max_size) {
      max_size = k;
      at_max = 0;
    }
    at_max += k == max_size;
  }
  return {rigid, at_max};
}

}  // namespace oracles
