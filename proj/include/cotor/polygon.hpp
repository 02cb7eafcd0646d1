#pragma once

// Combinatorial model of the cluster category of type A on an N-gon:
// arcs are indecomposables, crossing is Ext¹, rotation is the shift.
// No morphism calculus is published; engines needing cones refuse it.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cotor/category.hpp"
#include "cotor/subcat.hpp"

namespace cotor {

struct Arc {
  int i = 0, j = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

inline std::string arc_string(const Arc& a) { return "arc(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")"; }

// Strict interleaving of endpoints around the cycle.
inline bool crossing(const Arc& a, const Arc& b) {
  return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

class PolygonCat {
 public:
  explicit PolygonCat(int n) : n_(n) {
    if (n < 4) throw InputError("polygon: N must be at least 4");
    for (int i = 0; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        index_[{i, j}] = static_cast<int>(arcs_.size());
        arcs_.push_back({i, j});
      }
    }
    if (static_cast<int>(arcs_.size()) > Subcat::max_size) throw InputError("polygon: too many arcs");
  }

  int vertices() const { return n_; }
  std::string spec() const { return "polygon:N=" + std::to_string(n_); }
  BackendCaps caps() const { return {false, false}; }
  int size() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int id) const { return arcs_.at(id); }
  std::string label(int id) const { return arc_string(arc(id)); }

  Arc make_arc(int a, int b) const {
    a = ((a % n_) + n_) % n_;
    b = ((b % n_) + n_) % n_;
    if (a > b) std::swap(a, b);
    if (b - a < 2 || (a == 0 && b == n_ - 1)) throw InputError("polygon: not an arc");
    return {a, b};
  }
  int id_of(const Arc& a) const {
    auto it = index_.find(a);
    if (it == index_.end()) throw InputError("polygon: unknown arc " + arc_string(a));
    return it->second;
  }

  Arc rotate(const Arc& a, int k) const { return make_arc(a.i - k, a.j - k); }
  int shift_indec(int id, int k) const { return id_of(rotate(arc(id), k)); }
  bool cross(int a, int b) const { return crossing(arc(a), arc(b)); }
  // Hom(a,b) ≠ 0 iff Ext¹(a, b[-1]) ≠ 0.
  bool hom_nonzero(int a, int b) const { return cross(a, shift_indec(b, -1)); }

  Subcat z_of(const Subcat& rigid) const {
    Subcat z;
    for (int a = 0; a < size(); ++a) {
      bool ok = true;
      for (int r : rigid.members()) ok = ok && !cross(a, r);
      if (ok) z.insert(a);
    }
    return z;
  }

  bool is_rigid(const Subcat& s) const {
    const auto m = s.members();
    for (std::size_t x = 0; x < m.size(); ++x) {
      for (std::size_t y = x + 1; y < m.size(); ++y) {
        if (cross(m[x], m[y])) return false;
      }
    }
    return true;
  }

  // Arcs among the four sides of the quadrilateral spanned by two crossing arcs.
  std::vector<int> connecting_arcs(int a, int b) const {
    const Arc x = arc(a), y = arc(b);
    int v[4] = {x.i, x.j, y.i, y.j};
    std::sort(v, v + 4);
    std::vector<int> out;
    for (int t = 0; t < 4; ++t) {
      int p = v[t], q = v[(t + 1) % 4];
      if (p > q) std::swap(p, q);
      auto it = index_.find({p, q});
      if (it != index_.end()) out.push_back(it->second);
    }
    return out;
  }

  bool is_ptolemy(const Subcat& s) const {
    const auto m = s.members();
    for (std::size_t x = 0; x < m.size(); ++x) {
      for (std::size_t y = x + 1; y < m.size(); ++y) {
        if (!cross(m[x], m[y])) continue;
        for (int c : connecting_arcs(m[x], m[y])) {
          if (!s.contains(c)) return false;
        }
      }
    }
    return true;
  }

  Subcat ptolemy_closure(Subcat s) const {
    for (bool grew = true; grew;) {
      grew = false;
      const auto m = s.members();
      for (std::size_t x = 0; x < m.size(); ++x) {
        for (std::size_t y = x + 1; y < m.size(); ++y) {
          if (!cross(m[x], m[y])) continue;
          for (int c : connecting_arcs(m[x], m[y])) {
            if (!s.contains(c)) {
              s.insert(c);
              grew = true;
            }
          }
        }
      }
    }
    return s;
  }

 private:
  int n_;
  std::vector<Arc> arcs_;
  std::map<Arc, int> index_;
};

// All pairwise non-crossing arc sets, by backtracking.
inline std::vector<Subcat> enumerate_rigid(const PolygonCat& p) {
  std::vector<Subcat> out;
  std::function<void(int, Subcat)> go = [&](int next, Subcat cur) {
    out.push_back(cur);
    for (int a = next; a < p.size(); ++a) {
      bool ok = true;
      for (int m : cur.members()) ok = ok && !p.cross(a, m);
      if (!ok) continue;
      Subcat nxt = cur;
      nxt.insert(a);
      go(a + 1, nxt);
    }
  };
  go(0, Subcat{});
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Subcat> enumerate_triangulations(const PolygonCat& p) {
  std::vector<Subcat> out;
  for (const Subcat& s : enumerate_rigid(p)) {
    if (s.count() == p.vertices() - 3) out.push_back(s);
  }
  return out;
}

// Crossing-closed sets, filtered from all arc subsets.
inline std::vector<Subcat> enumerate_ptolemy(const PolygonCat& p, int jobs = 1) {
  return enumerate_subcats(p.size(), [&](const Subcat& s) { return p.is_ptolemy(s); }, jobs);
}

// The same sets as images of the closure operator.
inline std::vector<Subcat> enumerate_ptolemy_by_closure(const PolygonCat& p) {
  std::set<Subcat> seen;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t b = 0; b < total; ++b) seen.insert(p.ptolemy_closure(Subcat::from_bits(b)));
  return {seen.begin(), seen.end()};
}

// Cotorsion pairs of the model: U = X[1], V = X^⊥ over crossing-closed X.
inline std::vector<std::pair<Subcat, Subcat>> polygon_cotorsion_pairs(const PolygonCat& p, int jobs = 1) {
  std::vector<std::pair<Subcat, Subcat>> out;
  for (const Subcat& x : enumerate_ptolemy(p, jobs)) {
    const Subcat u = shift_subcat(p, x, 1);
    out.push_back({u, right_perp(p, u, -1)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Piece {
  std::vector<int> vertices;  // cyclic order
};

struct CutReduction {
  Subcat i, z;
  std::vector<Piece> pieces;
  // Z-arc outside I -> (piece, local endpoint positions p < q)
  std::map<int, std::tuple<int, int, int>> dictionary;
};

inline CutReduction cut_reduction(const PolygonCat& p, const Subcat& rigid) {
  if (!p.is_rigid(rigid)) throw InputError("cut_reduction: arc set is not rigid");
  CutReduction cr;
  cr.i = rigid;
  cr.z = p.z_of(rigid);
  std::vector<int> all(p.vertices());
  for (int v = 0; v < p.vertices(); ++v) all[v] = v;
  cr.pieces.push_back({all});
  for (int a : rigid.members()) {
    const Arc arc = p.arc(a);
    for (std::size_t k = 0; k < cr.pieces.size(); ++k) {
      const std::vector<int> vs = cr.pieces[k].vertices;
      const int m = static_cast<int>(vs.size());
      auto pi = std::find(vs.begin(), vs.end(), arc.i);
      auto pj = std::find(vs.begin(), vs.end(), arc.j);
      if (pi == vs.end() || pj == vs.end()) continue;
      const int x = static_cast<int>(pi - vs.begin()), y = static_cast<int>(pj - vs.begin());
      const int gap = ((y - x) % m + m) % m;
      if (gap < 2 || gap > m - 2) continue;  // a side of this piece
      std::vector<int> left, right;
      for (int t = x;; t = (t + 1) % m) {
        left.push_back(vs[t]);
        if (t == y) break;
      }
      for (int t = y;; t = (t + 1) % m) {
        right.push_back(vs[t]);
        if (t == x) break;
      }
      cr.pieces[k].vertices = left;
      cr.pieces.push_back({right});
      break;
    }
  }
  for (int a : (cr.z - cr.i).members()) {
    const Arc arc = p.arc(a);
    bool found = false;
    for (std::size_t k = 0; k < cr.pieces.size() && !found; ++k) {
      const auto& vs = cr.pieces[k].vertices;
      auto pi = std::find(vs.begin(), vs.end(), arc.i);
      auto pj = std::find(vs.begin(), vs.end(), arc.j);
      if (pi == vs.end() || pj == vs.end()) continue;
      const int x = static_cast<int>(pi - vs.begin()), y = static_cast<int>(pj - vs.begin());
      const int m = static_cast<int>(vs.size());
      const int lo = std::min(x, y), hi = std::max(x, y);
      if (hi - lo < 2 || (lo == 0 && hi == m - 1)) continue;
      cr.dictionary[a] = {static_cast<int>(k), lo, hi};
      found = true;
    }
    if (!found) throw InternalError("cut_reduction: arc of Z lies in no piece");
  }
  return cr;
}

// Reduced shift: rotation by one step within the piece, in the same sense as
// the ambient rotation.
inline int reduced_shift(const PolygonCat& p, const CutReduction& cr, int a, int k) {
  const auto [piece, x, y] = cr.dictionary.at(a);
  const auto& vs = cr.pieces[piece].vertices;
  const int m = static_cast<int>(vs.size());
  const int nx = (((x - k) % m) + m) % m, ny = (((y - k) % m) + m) % m;
  return p.id_of(p.make_arc(vs[nx], vs[ny]));
}

inline Subcat zz_mutate(const PolygonCat& p, const Subcat& rigid, const Subcat& a, int k) {
  const CutReduction cr = cut_reduction(p, rigid);
  if (!rigid.subset_of(a) || !a.subset_of(cr.z)) throw InputError("zz_mutate: need I <= A <= Z");
  Subcat out = rigid;
  for (int x : (a - rigid).members()) out.insert(reduced_shift(p, cr, x, k));
  return out;
}

// DOT graph of zz_mutate with k = 1 on the model cotorsion pairs with I <= U <= Z.
inline std::string polygon_orbit_graph(const PolygonCat& p, const Subcat& rigid) {
  const Subcat z = p.z_of(rigid);
  std::vector<Subcat> nodes;
  for (const auto& [u, v] : polygon_cotorsion_pairs(p)) {
    if (rigid.subset_of(u) && u.subset_of(z)) nodes.push_back(u);
  }
  auto name = [&](const Subcat& s) {
    std::string out = "[";
    bool first = true;
    for (const auto& l : subcat_labels(p, s)) {
      out += (first ? "" : ",") + l;
      first = false;
    }
    return out + "]";
  };
  std::string dot = "digraph mutation {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) dot += "  n" + std::to_string(i) + " [label=\"U=" + name(nodes[i]) + "\"];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Subcat m = zz_mutate(p, rigid, nodes[i], 1);
    const auto it = std::find(nodes.begin(), nodes.end(), m);
    if (it == nodes.end()) throw InternalError("polygon orbit graph: image is not a node");
    dot += "  n" + std::to_string(i) + " -> n" + std::to_string(it - nodes.begin()) + ";\n";
  }
  return dot + "}\n";
}

}  // namespace cotor
