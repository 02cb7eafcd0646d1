#pragma once

// Property suites over one backend: every enumerated pair, twin pair and
// quotient is checked, and failures are recorded as readable counterexamples.

#include <map>
#include <memory>
#include <random>
#include <set>
#include <tuple>
#include <string>
#include <type_traits>
#include <vector>

#include "cotor/category.hpp"
#include "cotor/mutation.hpp"
#include "cotor/nakayama.hpp"
#include "cotor/pairs.hpp"
#include "cotor/polygon.hpp"
#include "cotor/subcat.hpp"
#include "cotor/zi.hpp"

namespace cotor {

struct SuiteResult {
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  Verdict verdict = Verdict::yes;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      verdict = Verdict::no;
      failures.push_back(what);
    }
  }
  void undecided(const std::string& what) {
    ++checks;
    if (verdict == Verdict::yes) verdict = Verdict::inconclusive;
    notes.push_back("inconclusive: " + what);
  }
};

template <IndecCategory B>
TwinPair trivial_hovey(const B& cat) {
  const Subcat all = Subcat::all(cat.size());
  return {{Subcat{}, all}, {all, Subcat{}}};
}

inline TwinPair degenerate(const CotorsionPair& p) { return {p, p}; }

template <IndecCategory B>
std::string tcp_string(const B& cat, const TwinPair& p) {
  return "S=" + subcat_string(cat, p.s()) + ";T=" + subcat_string(cat, p.t()) + ";U=" + subcat_string(cat, p.u()) +
         ";V=" + subcat_string(cat, p.v());
}

template <IndecCategory B>
std::string pair_string(const B& cat, const CotorsionPair& p) {
  return "U=" + subcat_string(cat, p.u) + ";V=" + subcat_string(cat, p.v);
}

// Everything enumerated once per backend, with quotients built on demand.
template <ExactTriangulated B>
class Lab {
 public:
  Lab(const B& cat, int cap = 4, int jobs = 1) : cat_(cat), star_(cat, cap), engine_(star_) {
    cps_ = engine_.enumerate_cotorsion(jobs);
    tcps_ = enumerate_tcps(cat_, cps_.pairs);
    for (const auto& t : tcps_) {
      if (t.concentric()) concentric_.push_back(t);
    }
  }

  const B& category() const { return cat_; }
  const StarOracle<B>& star() const { return star_; }
  const PairEngine<B>& engine() const { return engine_; }
  const CotorsionList& cotorsion() const { return cps_; }
  const std::vector<TwinPair>& tcps() const { return tcps_; }
  const std::vector<TwinPair>& concentric() const { return concentric_; }

  const ZIQuotient<B>& quotient(const TwinPair& p) const {
    auto it = quotients_.find(p);
    if (it == quotients_.end()) it = quotients_.emplace(p, std::make_unique<ZIQuotient<B>>(engine_, p)).first;
    return *it->second;
  }

  // (I) and (II) both hold; the answer is cached.
  bool satisfies_I_II(const TwinPair& p) const {
    auto it = i_ii_.find(p);
    if (it != i_ii_.end()) return it->second;
    const bool ok = engine_.check_condition_II(p) == Verdict::yes && quotient(p).check_condition_I() == Verdict::yes;
    i_ii_[p] = ok;
    return ok;
  }

  MutationEngine<B> mutation(const TwinPair& p) const { return MutationEngine<B>(engine_, quotient(p), cps_.pairs); }

  std::string name(const TwinPair& p) const { return tcp_string(cat_, p); }

 private:
  const B& cat_;
  StarOracle<B> star_;
  PairEngine<B> engine_;
  CotorsionList cps_;
  std::vector<TwinPair> tcps_, concentric_;
  mutable std::map<TwinPair, std::unique_ptr<ZIQuotient<B>>> quotients_;
  mutable std::map<TwinPair, bool> i_ii_;
};

// The ZZ-type pair with S = V = I: T = I[-1]^⊥, U = ⊥I[1], required to agree.
template <ExactTriangulated B>
TwinPair zz_pair(const PairEngine<B>& e, const Subcat& i) {
  const B& cat = e.category();
  const CotorsionPair inner{i, right_perp(cat, i, -1)};
  const CotorsionPair outer{left_perp(cat, i, 1), i};
  if (!(inner.v == outer.u)) throw InputError("zz: I[-1]^perp and perp I[1] differ, no pair of this type");
  if (e.is_cotorsion_pair(inner) != Verdict::yes || e.is_cotorsion_pair(outer) != Verdict::yes) {
    throw InputError("zz: I does not give cotorsion pairs");
  }
  return {inner, outer};
}

inline SuiteResult suite_backend(const Nakayama& cat, std::uint64_t seed = 0) {
  SuiteResult r{"backend"};
  const int k = cat.size();
  std::mt19937_64 rng(seed);
  auto check_tri = [&](const Tri& t, const std::string& what) { r.check(composites_vanish(cat, t), what + ": composites"); };
  for (int a = 0; a < k; ++a) {
    const Obj x = Obj::of(a);
    const Tri t = cat.cone(identity(cat, x));
    r.check(t.c.empty(), "cone(id) nonzero for " + cat.label(a));
    check_tri(t, "cone(id " + cat.label(a) + ")");
    for (int b = 0; b < k; ++b) {
      const Obj y = Obj::of(b);
      const Tri z = cat.cone(zero_mor(cat, x, y));
      r.check(z.c == y + shift_obj(cat, x, 1), "cone(0: " + cat.label(a) + "->" + cat.label(b) + ")");
      check_tri(z, "cone(0)");
      for (std::size_t i = 0; i < cat.hom_dim_indec(a, b); ++i) {
        check_tri(cat.cone(basis_mor(cat, x, y, i)), "cone(basis " + cat.label(a) + "->" + cat.label(b) + ")");
      }
    }
  }
  // random maps between sums of two indecomposables
  std::uniform_int_distribution<int> pick(0, k - 1);
  for (int s = 0; s < 40; ++s) {
    const Obj x(std::vector<int>{pick(rng), pick(rng)});
    const Obj y(std::vector<int>{pick(rng), pick(rng)});
    const std::size_t d = hom_dim(cat, x, y);
    BitVec v(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (rng() & 1u) v.set(i);
    }
    check_tri(cat.cone(Mor{x, y, v}), "cone(random " + obj_to_string(cat, x) + "->" + obj_to_string(cat, y) + ")");
  }
  if (cat.params().m == 1) {
    const int n = cat.params().n;
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        const std::size_t want = static_cast<std::size_t>(std::min({i, j, n - i, n - j}));
        r.check(cat.hom_dim_indec(cat.id_of(0, i), cat.id_of(0, j)) == want,
                "stable Hom dim between lengths " + std::to_string(i) + "," + std::to_string(j));
      }
    }
  }
  return r;
}

template <ExactTriangulated B>
SuiteResult suite_duality(const Lab<B>& lab) {
  SuiteResult r{"duality"};
  if (!lab.cotorsion().complete) r.undecided("cotorsion enumeration incomplete");
  for (const auto& p : lab.cotorsion().pairs) {
    r.check(satisfies_duality(lab.category(), p), pair_string(lab.category(), p));
  }
  return r;
}

// U∩N^i = S, T∩N^f = V for every twin pair, and maps U -> T[1] through N^i vanish.
template <ExactTriangulated B>
SuiteResult suite_tcp_identities(const Lab<B>& lab, std::uint64_t seed = 0, int samples = 100) {
  SuiteResult r{"tcp-identities"};
  const B& cat = lab.category();
  std::vector<Subcat> nis;
  for (const auto& p : lab.tcps()) {
    auto [ni, ok1] = lab.star().star_indecs(p.s(), shift_subcat(cat, p.v(), 1));
    auto [nf, ok2] = lab.star().star_indecs(shift_subcat(cat, p.s(), -1), p.v());
    if (!ok1 || !ok2) r.undecided(lab.name(p));
    r.check((p.u() & ni) == p.s() && (p.t() & nf) == p.v(), "U∩N^i or T∩N^f: " + lab.name(p));
    nis.push_back(ni);
  }
  if (lab.tcps().empty()) return r;
  std::mt19937_64 rng(seed);
  std::size_t nontrivial = 0;
  auto random_mor = [&](const Obj& x, const Obj& y) {
    const std::size_t d = hom_dim(cat, x, y);
    BitVec v(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (rng() & 1u) v.set(i);
    }
    return Mor{x, y, v};
  };
  auto pick = [&](const Subcat& s) {
    const auto m = s.members();
    return m[rng() % m.size()];
  };
  for (int s = 0; s < samples; ++s) {
    const std::size_t t = rng() % lab.tcps().size();
    const TwinPair& p = lab.tcps()[t];
    if (p.u().empty() || p.t().empty() || nis[t].empty()) {
      r.check(true, "sample");
      continue;
    }
    const Obj u = Obj::of(pick(p.u()));
    const Obj tt = shift_obj(cat, Obj::of(pick(p.t())), 1);
    const Obj n(std::vector<int>{pick(nis[t]), pick(nis[t])});
    const Mor a = random_mor(u, n), b = random_mor(n, tt);
    const Mor f = compose(cat, a, b);
    if (!a.is_zero() && !b.is_zero()) ++nontrivial;
    r.check(f.is_zero(), "nonzero map through N^i in " + lab.name(p));
  }
  r.notes.push_back("sampled factorizations with both factors nonzero: " + std::to_string(nontrivial));
  return r;
}

template <ExactTriangulated B>
SuiteResult suite_concentric_classification(const Lab<B>& lab) {
  SuiteResult r{"concentric-classification"};
  for (const auto& p : lab.concentric()) {
    const bool i_zero = p.i().empty();
    const bool st = classify(lab.category(), p.inner).t_structure;
    const bool uv = classify(lab.category(), p.outer).t_structure;
    r.check(i_zero == st && st == uv, lab.name(p));
  }
  return r;
}

template <ExactTriangulated B>
SuiteResult suite_adjunction(const Lab<B>& lab) {
  SuiteResult r{"adjunction"};
  for (const auto& p : lab.concentric()) {
    const auto& q = lab.quotient(p);
    for (int x : q.objects()) {
      for (int y : q.objects()) {
        const Obj ox = Obj::of(x), oy = Obj::of(y);
        r.check(q.qdim(q.Sigma_obj(ox), oy) == q.qdim(ox, q.Omega_obj(oy)),
                lab.name(p) + " at " + lab.category().label(x) + "," + lab.category().label(y));
      }
    }
  }
  return r;
}

// Σ∘Ω ≅ id ≅ Ω∘Σ and Σ(ωT) ≅ σ(ω_U(T[1])) under (I)+(II).
template <ExactTriangulated B>
SuiteResult suite_triangulation(const Lab<B>& lab) {
  SuiteResult r{"triangulation"};
  const B& cat = lab.category();
  for (const auto& p : lab.concentric()) {
    if (!lab.satisfies_I_II(p)) continue;
    const auto& q = lab.quotient(p);
    for (int z : q.objects()) {
      const Obj o = Obj::of(z);
      r.check(q.Sigma_obj(q.Omega_obj(o)) == o, "Sigma Omega at " + cat.label(z) + " in " + lab.name(p));
      r.check(q.Omega_obj(q.Sigma_obj(o)) == o, "Omega Sigma at " + cat.label(z) + " in " + lab.name(p));
    }
    const Subcat v1 = shift_subcat(cat, p.v(), 1);
    for (int t : p.t().members()) {
      const Obj t1 = shift_obj(cat, Obj::of(t), 1);
      const StarResult w = lab.star().contains(p.u(), v1, t1);
      if (w.verdict != Verdict::yes) {
        r.undecided("U-approximation of " + obj_to_string(cat, t1));
        continue;
      }
      const Obj lhs = q.Sigma_obj(q.zi_class(q.omega(t).obj));
      const Obj rhs = q.zi_class(q.sigma_obj(w.witness->tri.a).obj);
      r.check(lhs == rhs, "shift compatibility at " + cat.label(t) + " in " + lab.name(p));
    }
  }
  return r;
}

template <ExactTriangulated B>
SuiteResult suite_bijection(const Lab<B>& lab, std::vector<std::string>* kinds = nullptr) {
  SuiteResult r{"bijection"};
  for (const auto& p : lab.concentric()) {
    if (!lab.satisfies_I_II(p)) continue;
    const BijectionReport rep = lab.mutation(p).verify_bijection();
    if (rep.verdict == Verdict::inconclusive) r.undecided(lab.name(p));
    r.check(rep.verdict != Verdict::no, lab.name(p));
    for (const auto& c : rep.counterexamples) r.failures.push_back(lab.name(p) + ": " + c);
    if (kinds) {
      const TwinFlags f = classify(p);
      kinds->push_back(p == trivial_hovey(lab.category()) ? "trivial"
                       : f.degenerate                     ? "degenerate"
                       : f.zz_setting                     ? "zz"
                                                          : "other");
    }
  }
  return r;
}

template <ExactTriangulated B>
SuiteResult suite_monomorphism(const Lab<B>& lab) {
  SuiteResult r{"monomorphism"};
  const B& cat = lab.category();
  for (const auto& p : lab.concentric()) {
    if (!lab.satisfies_I_II(p)) continue;
    const auto& q = lab.quotient(p);
    for (int u : p.u().members()) {
      for (int t : p.t().members()) {
        const std::size_t ext = hom_dim(cat, Obj::of(u), shift_obj(cat, Obj::of(t), 1));
        const std::size_t zi = q.ext1_zi(q.zi_class(q.sigma(u).obj), q.zi_class(q.omega(t).obj));
        r.check(ext <= zi, "Ext(" + cat.label(u) + "," + cat.label(t) + ") in " + lab.name(p));
      }
    }
  }
  return r;
}

template <ExactTriangulated B>
SuiteResult suite_hovey(const Lab<B>& lab) {
  SuiteResult r{"hovey"};
  const B& cat = lab.category();
  const Subcat all = Subcat::all(cat.size());
  for (const auto& p : lab.concentric()) {
    const HoveyReport h = lab.engine().is_hovey(p);
    if (h.verdict == Verdict::inconclusive) {
      r.undecided(lab.name(p));
      continue;
    }
    if (classify(p).degenerate) r.check(h.verdict == Verdict::yes && h.n == all, "degenerate not Hovey with N=C: " + lab.name(p));
    if (p == trivial_hovey(cat)) r.check(h.verdict == Verdict::yes && h.n.empty(), "trivial pair not Hovey with N=0");
    if (h.verdict != Verdict::yes) continue;
    r.check(h.shift_closed, "N not shift closed: " + lab.name(p));
    r.check(h.extension_closed == Verdict::yes, "N not extension closed: " + lab.name(p));
    r.check(h.summand_closed == Verdict::yes, "N not summand closed: " + lab.name(p));
    r.check(h.perp_identities, "perp identities fail: " + lab.name(p));
  }
  return r;
}

template <ExactTriangulated B>
SuiteResult suite_condition_III(const Lab<B>& lab) {
  SuiteResult r{"condition-III"};
  for (const auto& p : lab.concentric()) {
    const Verdict v3 = lab.engine().check_condition_III(p);
    if (v3 == Verdict::inconclusive) r.undecided(lab.name(p));
    if (v3 != Verdict::yes) continue;
    r.check(lab.satisfies_I_II(p), "(III) holds but (I)+(II) fails: " + lab.name(p));
  }
  return r;
}

// Under (III), Σ Z ≅ ⟨1⟩Z and Ω Z ≅ ⟨-1⟩Z in Z/I.
template <ExactTriangulated B>
SuiteResult suite_bracket(const Lab<B>& lab) {
  SuiteResult r{"bracket-shift"};
  for (const auto& p : lab.concentric()) {
    if (lab.engine().check_condition_III(p) != Verdict::yes) continue;
    const auto& q = lab.quotient(p);
    for (int z : q.objects()) {
      const Obj o = Obj::of(z);
      r.check(q.Sigma_obj(o) == q.zi_class(q.bracket_up(z).obj), "Sigma vs <1> at " + lab.category().label(z));
      r.check(q.Omega_obj(o) == q.zi_class(q.bracket_down(z).obj), "Omega vs <-1> at " + lab.category().label(z));
    }
  }
  return r;
}

template <ExactTriangulated B>
SuiteResult suite_mu(const Lab<B>& lab) {
  SuiteResult r{"mu"};
  for (const auto& p : lab.concentric()) {
    const auto& q = lab.quotient(p);
    for (int x : (p.t() | p.u()).members()) {
      const MuResult m = q.mu_map(Obj::of(x));
      r.check(m.iso, "mu not iso at " + lab.category().label(x) + " in " + lab.name(p));
      r.check(m.cone_criterion == Verdict::yes, "cone criterion disagrees at " + lab.category().label(x));
    }
  }
  return r;
}

// Internal consistency of the polygon model.
inline SuiteResult suite_polygon(const PolygonCat& p, int jobs = 1) {
  SuiteResult r{"polygon"};
  const int k = p.size();
  for (int a = 0; a < k; ++a) {
    r.check(!p.cross(a, a), "crossing not irreflexive at " + p.label(a));
    int b = a;
    for (int t = 0; t < p.vertices(); ++t) b = p.shift_indec(b, 1);
    r.check(b == a, "rotation order at " + p.label(a));
    for (int c = 0; c < k; ++c) {
      r.check(p.cross(a, c) == p.cross(c, a), "crossing not symmetric");
      r.check(p.cross(a, c) == p.cross(p.shift_indec(a, 1), p.shift_indec(c, 1)), "rotation breaks crossing");
    }
  }
  const auto rigid = enumerate_rigid(p);
  if (k <= 24) {
    std::size_t brute = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) brute += p.is_rigid(Subcat::from_bits(bits));
    r.check(brute == rigid.size(), "rigid count differs from brute force");
    r.check(enumerate_ptolemy(p, jobs) == enumerate_ptolemy_by_closure(p), "Ptolemy enumerators disagree");
  } else {
    r.notes.push_back("brute-force cross counts skipped above 24 arcs");
  }
  for (const Subcat& i : rigid) {
    const CutReduction cr = cut_reduction(p, i);
    const Subcat zi = cr.z - cr.i;
    r.check(cr.dictionary.size() == static_cast<std::size_t>(zi.count()), "dictionary size");
    std::set<std::tuple<int, int, int>> images;
    for (const auto& [a, loc] : cr.dictionary) images.insert(loc);
    r.check(images.size() == cr.dictionary.size(), "dictionary not injective");
    std::size_t piece_arcs = 0;
    for (const auto& pc : cr.pieces) {
      const std::size_t m = pc.vertices.size();
      piece_arcs += m * (m - 3) / 2;
    }
    r.check(piece_arcs == cr.dictionary.size(), "dictionary not onto the arcs of the pieces");
    Subcat image;
    for (int a : zi.members()) image.insert(reduced_shift(p, cr, a, 1));
    r.check(image == zi, "reduced shift is not a permutation of Z");
    for (const auto& [a, la] : cr.dictionary) {
      for (const auto& [b, lb] : cr.dictionary) {
        const bool local = std::get<0>(la) == std::get<0>(lb) &&
                           crossing({std::get<1>(la), std::get<2>(la)}, {std::get<1>(lb), std::get<2>(lb)});
        r.check(p.cross(a, b) == local, "dictionary does not respect crossings");
      }
    }
  }
  return r;
}

template <ExactTriangulated B>
std::vector<SuiteResult> run_suite(const Lab<B>& lab, const std::string& name, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  const bool all = name == "all";
  if constexpr (std::is_same_v<B, Nakayama>) {
    if (all || name == "backend") out.push_back(suite_backend(lab.category(), seed));
  }
  if (all || name == "duality") out.push_back(suite_duality(lab));
  if (all || name == "tcp-identities") out.push_back(suite_tcp_identities(lab, seed));
  if (all || name == "concentric-classification") out.push_back(suite_concentric_classification(lab));
  if (all || name == "adjunction") out.push_back(suite_adjunction(lab));
  if (all || name == "triangulation") out.push_back(suite_triangulation(lab));
  if (all || name == "bijection") out.push_back(suite_bijection(lab));
  if (all || name == "monomorphism") out.push_back(suite_monomorphism(lab));
  if (all || name == "hovey") out.push_back(suite_hovey(lab));
  if (all || name == "condition-III") out.push_back(suite_condition_III(lab));
  if (all || name == "bracket-shift") out.push_back(suite_bracket(lab));
  if (all || name == "mu") out.push_back(suite_mu(lab));
  if (out.empty()) throw InputError("unknown suite: " + name);
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"backend",      "duality",       "tcp-identities", "concentric-classification",
                                              "adjunction",   "triangulation", "bijection",      "monomorphism",
                                              "hovey",        "condition-III", "bracket-shift",  "mu",
                                              "all"};
  return names;
}

}  // namespace cotor
