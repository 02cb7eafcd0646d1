#pragma once

// Subcategory algebra: perpendiculars, star products X∗Y, closures, enumeration.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <thread>
#include <tuple>
#include <vector>

#include "cotor/category.hpp"

namespace cotor {

// { c : Hom(x[s], c) = 0 for all x in X }.
template <IndecCategory B>
Subcat right_perp(const B& cat, const Subcat& x, int s) {
  Subcat out;
  for (int c = 0; c < cat.size(); ++c) {
    bool ok = true;
    for (int i : x.members()) {
      if (cat.hom_nonzero(cat.shift_indec(i, s), c)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(c);
  }
  return out;
}

// { c : Hom(c, y[s]) = 0 for all y in Y }.
template <IndecCategory B>
Subcat left_perp(const B& cat, const Subcat& y, int s) {
  Subcat out;
  for (int c = 0; c < cat.size(); ++c) {
    bool ok = true;
    for (int i : y.members()) {
      if (cat.hom_nonzero(c, cat.shift_indec(i, s))) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(c);
  }
  return out;
}

// Ext¹(X,Y) = Hom(X, Y[1]) vanishes on all indecomposable pairs.
template <IndecCategory B>
bool ext1_vanishes(const B& cat, const Subcat& x, const Subcat& y) {
  for (int a : x.members()) {
    for (int b : y.members()) {
      if (ext_nonzero(cat, a, b)) return false;
    }
  }
  return true;
}

// All multisets of the given size over ids 0..k-1, in lexicographic order.
inline std::vector<Obj> multisets_of_size(int k, std::size_t size) {
  std::vector<Obj> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (cur.size() == size) {
      out.emplace_back(cur);
      return;
    }
    for (int i = from; i < k; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// A triangle X' -> C -> Y' -> X'[1] together with how it was produced.
struct TriangleWitness {
  Tri tri;
  Obj delta_src;               // Y''[-1] for the dense part
  Mor delta;                   // connecting map of the dense part
  Obj split_x, split_y;        // summands added as split triangles
};

struct StarResult {
  Verdict verdict = Verdict::no;
  std::optional<TriangleWitness> witness;
};

struct StarStats {
  std::size_t catalog_entries = 0;
  std::size_t skipped_spaces = 0;  // connecting-map spaces over the budget
  std::size_t unstable = 0;        // answers that changed between the two cap levels
  int cap = 0;
};

// Decides C ∈ X∗Y from a catalog of cones of dense connecting maps
// δ : Y'[-1] -> X' with |X'|+|Y'| bounded by cap+1. Positive answers always
// carry a witness triangle; negative answers are definite only when no
// connecting-map space was skipped for size.
template <ExactTriangulated B>
class StarOracle {
 public:
  explicit StarOracle(const B& cat, int cap = 4, std::size_t delta_budget = 20)
      : cat_(cat), cap_(cap), budget_(delta_budget) {
    if (cap < 2) throw InputError("star: cap must be at least 2");
    build_catalog();
  }

  const B& category() const { return cat_; }
  int cap() const { return cap_; }
  StarStats stats() const {
    std::lock_guard<std::mutex> lock(mu_);
    StarStats s = stats_;
    return s;
  }
  bool catalog_complete() const { return stats_.skipped_spaces == 0; }

  StarResult contains(const Subcat& x, const Subcat& y, const Obj& c) const {
    const Key key{x.bits(), y.bits(), c};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    StarResult res = compute(x, y, c);
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(key, res);
    return res;
  }

  // Indecomposables of X∗Y; the flag is false when some member was undecided.
  std::pair<Subcat, bool> star_indecs(const Subcat& x, const Subcat& y) const {
    Subcat out;
    bool complete = true;
    for (int i = 0; i < cat_.size(); ++i) {
      const Verdict v = contains(x, y, Obj::of(i)).verdict;
      if (v == Verdict::yes) out.insert(i);
      if (v == Verdict::inconclusive) complete = false;
    }
    return {out, complete};
  }

  // Least extension-closed subcategory containing X.
  std::pair<Subcat, bool> ext_closure(const Subcat& x) const {
    Subcat cur = x;
    bool complete = true;
    while (true) {
      auto [next, ok] = star_indecs(cur, cur);
      complete = complete && ok;
      next = next | cur;
      if (next == cur) return {cur, complete};
      cur = next;
    }
  }

  // Every triangle X' -> C -> Y' -> X'[1] obtainable from one catalog entry
  // plus split summands, with |X'|+|Y'| of the dense part at most `cap`.
  std::vector<TriangleWitness> triangle_enumerate(const Subcat& x, const Subcat& y, const Obj& c, int cap) const {
    std::vector<TriangleWitness> out;
    const Subcat xy = x | y;
    if (xy.contains(c)) out.push_back(split_witness(x, c));
    for (const auto& e : entries_) {
      if (e.level > cap || !x.contains(e.xp) || !y.contains(e.yp) || !c.contains(e.d)) continue;
      const Obj rest = c.minus(e.d);
      if (!xy.contains(rest)) continue;
      out.push_back(assemble({&e}, x, rest));
    }
    return out;
  }

 private:
  struct Entry {
    Obj xp, yp, d;
    Mor delta;
    int level = 0;
    Tri tri;  // xp -> d -> yp -> xp[1]
  };
  using Key = std::tuple<std::uint64_t, std::uint64_t, Obj>;

  void build_catalog() {
    const int k = cat_.size();
    const int max_level = cap_ + 1;
    std::set<std::tuple<Obj, Obj, Obj>> seen;
    for (int level = 2; level <= max_level; ++level) {
      for (int sx = 1; sx < level; ++sx) {
        const auto xs = multisets_of_size(k, static_cast<std::size_t>(sx));
        const auto ys = multisets_of_size(k, static_cast<std::size_t>(level - sx));
        for (const Obj& xp : xs) {
          for (const Obj& yp : ys) add_pair(xp, yp, level, seen);
        }
      }
    }
    stats_.catalog_entries = entries_.size();
    stats_.cap = cap_;
    by_summand_.resize(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      for (int s : Subcat::summands_of(entries_[i].d).members()) by_summand_[s].push_back(i);
    }
  }

  void add_pair(const Obj& xp, const Obj& yp, int level, std::set<std::tuple<Obj, Obj, Obj>>& seen) {
    const Obj src = shift_obj(cat_, yp, -1);
    const BlockLayout l = block_layout(cat_, src, xp);
    // A dense map needs a nonzero block in every row and column.
    for (std::size_t r = 0; r < l.rows; ++r) {
      std::size_t s = 0;
      for (std::size_t c = 0; c < l.cols; ++c) s += l.dim_at(r, c);
      if (s == 0) return;
    }
    for (std::size_t c = 0; c < l.cols; ++c) {
      std::size_t s = 0;
      for (std::size_t r = 0; r < l.rows; ++r) s += l.dim_at(r, c);
      if (s == 0) return;
    }
    if (l.total > budget_) {
      ++stats_.skipped_spaces;
      return;
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << l.total); ++mask) {
      BitVec v(l.total);
      for (std::size_t t = 0; t < l.total; ++t) {
        if ((mask >> t) & 1u) v.set(t);
      }
      if (!dense(l, v)) continue;
      const Mor delta{src, xp, v};
      const Tri cone = cat_.cone(delta);
      if (!seen.insert({xp, yp, cone.c}).second) continue;
      Entry e;
      e.xp = xp;
      e.yp = yp;
      e.d = cone.c;
      e.delta = delta;
      e.level = level;
      e.tri = rotate(cat_, cone);
      entries_.push_back(std::move(e));
    }
  }

  static bool dense(const BlockLayout& l, const BitVec& v) {
    std::vector<bool> row(l.rows, false), col(l.cols, false);
    for (std::size_t r = 0; r < l.rows; ++r) {
      for (std::size_t c = 0; c < l.cols; ++c) {
        const std::size_t o = l.at(r, c), d = l.dim_at(r, c);
        if (d && v.next_set(o) < o + d) row[r] = col[c] = true;
      }
    }
    return std::all_of(row.begin(), row.end(), [](bool b) { return b; }) &&
           std::all_of(col.begin(), col.end(), [](bool b) { return b; });
  }

  TriangleWitness split_witness(const Subcat& x, const Obj& c) const {
    const Obj cx = c.filter([&](int i) { return x.contains(i); });
    const Obj cy = c.minus(cx);
    TriangleWitness w;
    w.tri = split_triangle(cat_, cx, cy);
    w.split_x = cx;
    w.split_y = cy;
    return w;
  }

  TriangleWitness assemble(const std::vector<const Entry*>& parts, const Subcat& x, const Obj& rest) const {
    TriangleWitness w = split_witness(x, rest);
    Obj dsrc, dx, dy;
    std::optional<Tri> dense_tri;
    std::optional<Mor> delta;
    for (const Entry* e : parts) {
      dense_tri = dense_tri ? tri_sum(cat_, *dense_tri, e->tri) : e->tri;
      delta = delta ? block_diag(cat_, *delta, e->delta) : e->delta;
    }
    if (dense_tri) {
      w.tri = tri_sum(cat_, *dense_tri, w.tri);
      w.delta = *delta;
      w.delta_src = delta->src;
    }
    return w;
  }

  // Cover the summands of c outside X∪Y by disjoint catalog cones.
  bool cover(const Subcat& x, const Subcat& y, const Obj& rem, int max_level, std::vector<const Entry*>& chosen,
             std::set<Obj>& failed) const {
    const Subcat xy = x | y;
    auto it = std::find_if(rem.begin(), rem.end(), [&](int i) { return !xy.contains(i); });
    if (it == rem.end()) return true;
    if (failed.count(rem)) return false;
    const int need = *it;
    for (std::size_t idx : by_summand_[need]) {
      const Entry& e = entries_[idx];
      if (e.level > max_level) continue;
      if (!rem.contains(e.d) || !x.contains(e.xp) || !y.contains(e.yp)) continue;
      chosen.push_back(&e);
      if (cover(x, y, rem.minus(e.d), max_level, chosen, failed)) return true;
      chosen.pop_back();
    }
    failed.insert(rem);
    return false;
  }

  StarResult compute(const Subcat& x, const Subcat& y, const Obj& c) const {
    const Subcat xy = x | y;
    StarResult res;
    if (xy.contains(c)) {
      res.verdict = Verdict::yes;
      res.witness = split_witness(x, c);
      return res;
    }
    std::vector<const Entry*> chosen;
    std::set<Obj> failed;
    const bool found = cover(x, y, c, cap_ + 1, chosen, failed);
    if (found) {
      std::vector<const Entry*> low;
      std::set<Obj> failed_low;
      if (!cover(x, y, c, cap_, low, failed_low)) {
        std::lock_guard<std::mutex> lock(mu_);
        ++stats_.unstable;
      }
      Obj rest = c;
      for (const Entry* e : chosen) rest = rest.minus(e->d);
      res.verdict = Verdict::yes;
      res.witness = assemble(chosen, x, rest);
      return res;
    }
    res.verdict = catalog_complete() ? Verdict::no : Verdict::inconclusive;
    return res;
  }

  const B& cat_;
  int cap_;
  std::size_t budget_;
  std::vector<Entry> entries_;
  std::vector<std::vector<std::size_t>> by_summand_;
  mutable std::mutex mu_;
  mutable StarStats stats_;
  mutable std::map<Key, StarResult> cache_;
};

// All subsets of {0..k-1} satisfying pred, sorted by bit pattern. The subset
// space is split into contiguous ranges when jobs > 1.
template <class Pred>
std::vector<Subcat> enumerate_subcats(int k, Pred pred, int jobs = 1) {
  if (k > 27) throw InputError("enumerate_subcats: more than 27 indecomposables");
  const std::uint64_t total = std::uint64_t{1} << k;
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(total)));
  std::vector<std::vector<Subcat>> parts(jobs);
  auto work = [&](int j) {
    const std::uint64_t lo = total * j / jobs, hi = total * (j + 1) / jobs;
    for (std::uint64_t b = lo; b < hi; ++b) {
      const Subcat s = Subcat::from_bits(b);
      if (pred(s)) parts[j].push_back(s);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  std::vector<Subcat> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Same contract for predicates closed under taking subsets: grows sets by
// increasing id and prunes at the first failure.
template <class Pred>
std::vector<Subcat> enumerate_down_closed(int k, Pred pred) {
  if (k > 27) throw InputError("enumerate_down_closed: more than 27 indecomposables");
  std::vector<Subcat> out;
  std::function<void(Subcat, int)> rec = [&](Subcat cur, int from) {
    out.push_back(cur);
    for (int i = from; i < k; ++i) {
      Subcat next = cur;
      next.insert(i);
      if (pred(next)) rec(next, i + 1);
    }
  };
  if (pred(Subcat{})) rec(Subcat{}, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cotor
