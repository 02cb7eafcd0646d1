#pragma once

// Mutable cotorsion pairs relative to a concentric twin pair, the bijections
// with cotorsion pairs of Z/I, and the induced Z-action.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cotor/category.hpp"
#include "cotor/pairs.hpp"
#include "cotor/subcat.hpp"
#include "cotor/zi.hpp"

namespace cotor {

// Subcategories of Z/I, stored as sets of Z-indecomposables outside I.
struct ZICotorsionPair {
  Subcat l, r;
  friend bool operator==(const ZICotorsionPair&, const ZICotorsionPair&) = default;
  friend bool operator<(const ZICotorsionPair& a, const ZICotorsionPair& b) {
    return std::tie(a.l, a.r) < std::tie(b.l, b.r);
  }
};

struct ZICotorsionList {
  std::vector<ZICotorsionPair> pairs;
  bool complete = true;
};

struct BijectionReport {
  Verdict verdict = Verdict::yes;
  std::vector<CotorsionPair> mutable_pairs;
  std::vector<ZICotorsionPair> zi_pairs;
  bool ir_identity = true;
  bool ri_identity = true;
  bool cardinality = true;
  bool action = true;
  bool characterization = true;
  std::optional<bool> zz_description;  // only for pairs with S = V and U = T
  std::vector<std::string> counterexamples;
};

template <ExactTriangulated B>
class MutationEngine {
 public:
  // `ambient` must be the complete list of cotorsion pairs of the category.
  MutationEngine(const PairEngine<B>& pe, const ZIQuotient<B>& q, std::vector<CotorsionPair> ambient,
                 std::size_t map_budget = 14)
      : pe_(pe), star_(pe.star()), q_(q), cat_(pe.category()), ambient_(std::move(ambient)), budget_(map_budget) {
    const TwinPair& p = q_.pair();
    s_down_ = shift_subcat(cat_, p.s(), -1);
    v_up_ = shift_subcat(cat_, p.v(), 1);
    objs_ = q_.object_set();
    for (int a : objs_.members()) {
      for (int b : objs_.members()) {
        if (a < b && q_.qdim(Obj::of(a), Obj::of(b)) > 0 && q_.qdim(Obj::of(b), Obj::of(a)) > 0) {
          for (const Mor& f : q_.hom_mod_I(Obj::of(a), Obj::of(b)).reps) {
            if (q_.iso_in_quotient(f)) throw InternalError("distinct indecomposables became isomorphic in Z/I");
          }
        }
      }
    }
  }

  const ZIQuotient<B>& quotient() const { return q_; }

  // Definition route: sandwich plus vanishing of Ext¹ in Z/I between σ(A) and ω(B).
  // Fixed-point route: A = U∩(S[-1]∗A) and B = T∩(B∗V[1]). The two must agree.
  Verdict in_MP(const CotorsionPair& ab) const {
    const TwinPair& p = q_.pair();
    bool def = p.s().subset_of(ab.u) && ab.u.subset_of(p.u()) && p.v().subset_of(ab.v) && ab.v.subset_of(p.t());
    if (def) {
      for (int a : ab.u.members()) {
        const Obj sa = q_.zi_class(q_.sigma(a).obj);
        for (int b : ab.v.members()) {
          if (q_.ext1_zi(sa, q_.zi_class(q_.omega(b).obj)) != 0) {
            def = false;
            break;
          }
        }
        if (!def) break;
      }
    }
    auto [sa, ok1] = star_.star_indecs(s_down_, ab.u);
    auto [bv, ok2] = star_.star_indecs(ab.v, v_up_);
    const bool fixed = (p.u() & sa) == ab.u && (p.t() & bv) == ab.v;
    if (!ok1 || !ok2) {
      if (def != fixed) return Verdict::inconclusive;
    } else if (def != fixed) {
      throw InternalError("mutable class: definition and fixed-point description disagree on " + pair_string(ab));
    }
    return verdict_of(def);
  }

  std::vector<CotorsionPair> enumerate_MP() const {
    std::vector<CotorsionPair> out;
    for (const auto& ab : ambient_) {
      const Verdict v = in_MP(ab);
      if (v == Verdict::inconclusive) throw InconclusiveError("mutable class membership undecided for " + pair_string(ab));
      if (v == Verdict::yes) out.push_back(ab);
    }
    return out;
  }

  ZICotorsionPair R_map(const CotorsionPair& ab) const {
    ZICotorsionPair out;
    for (int a : ab.u.members()) out.l = out.l | Subcat::summands_of(q_.zi_class(q_.sigma(a).obj));
    for (int b : ab.v.members()) out.r = out.r | Subcat::summands_of(q_.zi_class(q_.omega(b).obj));
    return out;
  }

  CotorsionPair I_map(const ZICotorsionPair& lr) const {
    const TwinPair& p = q_.pair();
    const Subcat& i = q_.derived().i;
    auto [a, ok1] = star_.star_indecs(s_down_, lr.l | i);
    auto [b, ok2] = star_.star_indecs(lr.r | i, v_up_);
    // Second route through N^f and N^i.
    auto [a2, ok3] = star_.star_indecs(q_.derived().nf, lr.l | i);
    auto [b2, ok4] = star_.star_indecs(lr.r | i, q_.derived().ni);
    if (!(ok1 && ok2 && ok3 && ok4)) throw InconclusiveError("inverse image undecided");
    const CotorsionPair out{p.u() & a, p.t() & b};
    if ((p.u() & a2) != out.u || (p.t() & b2) != out.v) {
      throw InternalError("inverse images through S[-1] and N^f disagree");
    }
    const Verdict v = pe_.is_cotorsion_pair(out);
    if (v == Verdict::inconclusive) throw InconclusiveError("inverse image pair undecided: " + pair_string(out));
    if (v == Verdict::no) throw InternalError("inverse image is not a cotorsion pair: " + pair_string(out));
    return out;
  }

  ZICotorsionPair shift_zi(const ZICotorsionPair& lr, int k) const { return {q_.Sigma_set(lr.l, k), q_.Sigma_set(lr.r, k)}; }

  CotorsionPair mutate(const CotorsionPair& ab, int k) const {
    const CotorsionPair out = I_map(shift_zi(R_map(ab), k));
    if (in_MP(out) != Verdict::yes) throw InternalError("mutation left the mutable class: " + pair_string(out));
    return out;
  }

  bool ext_vanishes_zi(const Subcat& l, const Subcat& r) const {
    for (int x : l.members()) {
      for (int y : r.members()) {
        if (q_.ext1_zi(Obj::of(x), Obj::of(y)) != 0) return false;
      }
    }
    return true;
  }

  // Cotorsion pairs of Z/I, enumerated inside Z/I with standard right
  // triangles as the only source of extensions.
  ZICotorsionList enumerate_cp_zi() const {
    const auto cover = coverage();
    ZICotorsionList out;
    out.complete = cover_complete_;
    const std::vector<int> o = objs_.members();
    const std::size_t n = o.size();
    auto lift = [&](std::uint64_t mask) {
      Subcat s;
      for (std::size_t t = 0; t < n; ++t) {
        if ((mask >> t) & 1u) s.insert(o[t]);
      }
      return s;
    };
    for (std::uint64_t lm = 0; lm < (std::uint64_t{1} << n); ++lm) {
      const Subcat l = lift(lm);
      for (std::uint64_t rm = 0; rm < (std::uint64_t{1} << n); ++rm) {
        const Subcat r = lift(rm);
        if (!ext_vanishes_zi(l, r)) continue;
        const Subcat sr = q_.Sigma_set(r, 1);
        bool all = true;
        for (std::size_t t = 0; t < n && all; ++t) {
          bool hit = false;
          for (const auto& [ls, th] : cover[t]) {
            if (ls.subset_of(l) && th.subset_of(sr)) {
              hit = true;
              break;
            }
          }
          all = hit;
        }
        if (all) out.pairs.push_back({l, r});
      }
    }
    return out;
  }

  BijectionReport verify_bijection() const {
    const TwinPair& p = q_.pair();
    if (pe_.check_condition_II(p) != Verdict::yes || q_.check_condition_I() != Verdict::yes) {
      throw InputError("verify_bijection: the twin pair does not satisfy (I)+(II)");
    }
    BijectionReport rep;
    rep.mutable_pairs = enumerate_MP();
    const ZICotorsionList zl = enumerate_cp_zi();
    rep.zi_pairs = zl.pairs;
    if (!zl.complete) rep.verdict = Verdict::inconclusive;
    auto fail = [&](bool& flag, std::string msg) {
      flag = false;
      rep.counterexamples.push_back(std::move(msg));
    };
    const std::set<ZICotorsionPair> zset(rep.zi_pairs.begin(), rep.zi_pairs.end());
    const std::set<CotorsionPair> mset(rep.mutable_pairs.begin(), rep.mutable_pairs.end());
    for (const auto& ab : rep.mutable_pairs) {
      const ZICotorsionPair lr = R_map(ab);
      if (!zset.count(lr)) fail(rep.ri_identity, "R sends " + pair_string(ab) + " outside CP(Z/I): " + zi_string(lr));
      const CotorsionPair back = I_map(lr);
      if (!(back == ab)) fail(rep.ir_identity, "I(R(" + pair_string(ab) + ")) = " + pair_string(back));
    }
    for (const auto& lr : rep.zi_pairs) {
      const CotorsionPair ab = I_map(lr);
      if (!mset.count(ab)) fail(rep.ir_identity, "I sends " + zi_string(lr) + " outside the mutable class");
      const ZICotorsionPair back = R_map(ab);
      if (!(back == lr)) fail(rep.ri_identity, "R(I(" + zi_string(lr) + ")) = " + zi_string(back));
    }
    if (rep.mutable_pairs.size() != rep.zi_pairs.size()) {
      fail(rep.cardinality, "cardinalities differ: " + std::to_string(rep.mutable_pairs.size()) + " vs " +
                                std::to_string(rep.zi_pairs.size()));
    }
    if (rep.mutable_pairs.empty() && !objs_.empty()) fail(rep.cardinality, "empty mutable class with nonzero Z/I");
    if (rep.ir_identity && rep.ri_identity) {
      for (const auto& ab : rep.mutable_pairs) {
        if (!(mutate(ab, 0) == ab)) fail(rep.action, "mu_0 moves " + pair_string(ab));
        for (int a : {-1, 0, 1, 2}) {
          for (int b : {-1, 0, 1, 2}) {
            const CotorsionPair lhs = mutate(mutate(ab, b), a);
            const CotorsionPair rhs = mutate(ab, a + b);
            if (!(lhs == rhs)) {
              fail(rep.action, "mu_" + std::to_string(a) + " mu_" + std::to_string(b) + " differs from mu_" +
                                   std::to_string(a + b) + " on " + pair_string(ab));
            }
          }
        }
      }
    } else {
      rep.action = false;
    }
    if (classify(p).zz_setting) {
      std::vector<CotorsionPair> zz;
      for (const auto& ab : ambient_) {
        if (q_.derived().i.subset_of(ab.u) && ab.u.subset_of(q_.derived().z)) zz.push_back(ab);
      }
      rep.zz_description = zz == rep.mutable_pairs;
      if (!*rep.zz_description) rep.counterexamples.push_back("mutable class differs from {I <= A <= Z}");
    }
    const bool ok = rep.ir_identity && rep.ri_identity && rep.cardinality && rep.action && rep.characterization &&
                    rep.zz_description.value_or(true);
    if (!ok) rep.verdict = Verdict::no;
    return rep;
  }

  // DOT digraph of μ₁ on the mutable class.
  std::string orbit_graph() const {
    const auto mp = enumerate_MP();
    std::ostringstream os;
    os << "digraph mutation {\n";
    for (std::size_t i = 0; i < mp.size(); ++i) os << "  n" << i << " [label=\"" << pair_string(mp[i]) << "\"];\n";
    for (std::size_t i = 0; i < mp.size(); ++i) {
      const CotorsionPair m = mutate(mp[i], 1);
      const auto it = std::find(mp.begin(), mp.end(), m);
      if (it == mp.end()) throw InternalError("orbit graph: image outside the mutable class");
      os << "  n" << i << " -> n" << (it - mp.begin()) << ";\n";
    }
    os << "}\n";
    return os.str();
  }

  std::string pair_string(const CotorsionPair& p) const {
    return "U=" + subcat_string(cat_, p.u) + ";V=" + subcat_string(cat_, p.v);
  }
  std::string zi_string(const ZICotorsionPair& p) const { return "L=" + subcat_string(cat_, p.l) + ";R=" + subcat_string(cat_, p.r); }

 private:
  using Achieved = std::vector<std::pair<Subcat, Subcat>>;  // (summands of L', summands of third term)

  // For every Z/I object W, the achievable (L', third) pairs over right
  // triangles L' -> W -> third -> ΣL' with a ranging over all classes.
  std::vector<Achieved> coverage() const {
    const std::vector<int> o = objs_.members();
    std::vector<Achieved> out(o.size());
    cover_complete_ = true;
    for (std::size_t t = 0; t < o.size(); ++t) {
      const Obj w = Obj::of(o[t]);
      std::set<std::pair<Subcat, Subcat>> seen;
      seen.insert({Subcat{}, Subcat::summands_of(w)});
      std::vector<std::size_t> bound;
      for (int l : o) bound.push_back(q_.qdim(Obj::of(l), w));
      std::vector<std::size_t> mult(o.size(), 0);
      // odometer over multiplicity vectors
      while (true) {
        std::size_t pos = 0;
        while (pos < mult.size() && mult[pos] == bound[pos]) mult[pos++] = 0;
        if (pos == mult.size()) break;
        ++mult[pos];
        Obj lp;
        for (std::size_t j = 0; j < o.size(); ++j) lp = lp + Obj::repeat(o[j], mult[j]);
        const QuotientSpace qs = q_.hom_mod_I(lp, w);
        if (qs.dim > budget_) {
          cover_complete_ = false;
          continue;
        }
        const Subcat ls = Subcat::summands_of(lp);
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << qs.dim); ++c) {
          Mor a = zero_mor(cat_, lp, w);
          for (std::size_t j = 0; j < qs.dim; ++j) {
            if ((c >> j) & 1u) a = a + qs.reps[j];
          }
          const RightTriangle rt = q_.standard_right_triangle(a);
          seen.insert({ls, Subcat::summands_of(q_.zi_class(rt.third))});
        }
      }
      out[t].assign(seen.begin(), seen.end());
    }
    return out;
  }

  const PairEngine<B>& pe_;
  const StarOracle<B>& star_;
  const ZIQuotient<B>& q_;
  const B& cat_;
  std::vector<CotorsionPair> ambient_;
  std::size_t budget_;
  Subcat s_down_, v_up_, objs_;
  mutable bool cover_complete_ = true;
};

}  // namespace cotor
