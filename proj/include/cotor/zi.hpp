#pragma once

// The subquotient Z/I of a concentric twin cotorsion pair: quotient Hom spaces,
// the reflections σ and ω, the shifts ⟨±1⟩, Σ = σ∘⟨1⟩ and Ω = ω∘⟨-1⟩,
// standard triangles, Ext¹ in Z/I and the comparison map μ.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cotor/category.hpp"
#include "cotor/pairs.hpp"
#include "cotor/subcat.hpp"

namespace cotor {

// Some x with sum of x_j * column_j = rhs, columns produced on demand.
template <class Fn>
std::optional<BitVec> solve_columns(std::size_t count, std::size_t len, Fn&& column, const BitVec& rhs) {
  return f2::solve(linear_map_matrix(count, len, column), rhs);
}

struct QuotientSpace {
  std::size_t dim = 0;
  std::vector<Mor> reps;  // representatives of a basis of the quotient
};

// A triangle realising an object map together with the structure morphism.
struct Reflection {
  Obj obj;
  Tri tri;
  Mor map;  // σ: U -> σU (tri.g); ω: ωT -> T (tri.f)
};

// ⟨1⟩: tri = Z -> I_Z -> U -> Z[1];  ⟨-1⟩: tri = T -> I -> Z -> T[1].
struct BracketShift {
  Obj obj;
  Tri tri;
};

struct RightTriangle {
  Obj x, y, third;  // third is a representative in add Z, possibly with I-summands
  Mor f, second;    // X -> Y -> third
  Obj cone;         // C_f, an object of U
};

struct LeftTriangle {
  Obj third, x, y;  // third -> X -> Y
  Mor first, f;
  Obj cocone;       // C^f, an object of T
};

struct MuResult {
  Mor z;  // σ ω_U(X) -> ω σ_T(X)
  bool iso = false;
  Verdict cone_criterion = Verdict::no;
};

template <ExactTriangulated B>
class ZIQuotient {
 public:
  ZIQuotient(const PairEngine<B>& pe, const TwinPair& p)
      : pe_(pe), star_(pe.star()), cat_(pe.category()), p_(p), derived_(pe.derived_sets(p)) {
    const int k = cat_.size();
    ideal_.assign(static_cast<std::size_t>(k) * k, {});
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        Echelon e(cat_.hom_dim_indec(a, b));
        for (int i : derived_.i.members()) {
          for (std::size_t s = 0; s < cat_.hom_dim_indec(a, i); ++s) {
            for (std::size_t t = 0; t < cat_.hom_dim_indec(i, b); ++t) e.insert(cat_.compose_basis(a, i, b, s, t));
          }
        }
        ideal_[a * k + b] = e.basis();
      }
    }
    sigma_.resize(k);
    omega_.resize(k);
    up_.resize(k);
    down_.resize(k);
    const Subcat s_down = shift_subcat(cat_, p_.s(), -1);
    const Subcat v_up = shift_subcat(cat_, p_.v(), 1);
    const Subcat u_down = shift_subcat(cat_, p_.u(), -1);
    const Subcat t_up = shift_subcat(cat_, p_.t(), 1);
    for (int u : p_.u().members()) {
      const Tri t = witness(s_down, derived_.z, Obj::of(u), "sigma");
      sigma_[u] = Reflection{t.c, t, t.g};
    }
    for (int x : p_.t().members()) {
      const Tri t = witness(derived_.z, v_up, Obj::of(x), "omega");
      omega_[x] = Reflection{t.a, t, t.f};
    }
    for (int z : derived_.z.members()) {
      const Tri up = witness(u_down, derived_.i, Obj::of(z), "bracket +1");
      up_[z] = BracketShift{shift_obj(cat_, up.a, 1), rotate(cat_, up)};
      const Tri dn = witness(derived_.i, t_up, Obj::of(z), "bracket -1");
      const Obj t_obj = shift_obj(cat_, dn.c, -1);
      down_[z] = BracketShift{t_obj, Tri{t_obj, dn.a, dn.b, shift_mor(cat_, dn.h, -1), dn.f, dn.g, true}};
    }
  }

  const TwinPair& pair() const { return p_; }
  const DerivedSets& derived() const { return derived_; }
  const B& category() const { return cat_; }

  // Indecomposables of Z/I, i.e. members of Z outside I.
  std::vector<int> objects() const { return (derived_.z - derived_.i).members(); }
  Subcat object_set() const { return derived_.z - derived_.i; }

  // Canonical representative of the Z/I isomorphism class.
  Obj zi_class(const Obj& x) const {
    return x.filter([&](int i) { return !derived_.i.contains(i); });
  }

  // Vectors spanning the morphisms X -> Y factoring through add I.
  std::vector<BitVec> ideal_basis(const Obj& x, const Obj& y) const {
    const BlockLayout l = block_layout(cat_, x, y);
    std::vector<BitVec> out;
    for (std::size_t r = 0; r < y.size(); ++r) {
      for (std::size_t c = 0; c < x.size(); ++c) {
        for (const BitVec& b : ideal_[x[c] * cat_.size() + y[r]]) {
          BitVec v(l.total);
          v.assign(l.at(r, c), b);
          out.push_back(std::move(v));
        }
      }
    }
    return out;
  }

  bool in_ideal(const Mor& f) const {
    const BlockLayout l = block_layout(cat_, f.src, f.dst);
    for (std::size_t r = 0; r < f.dst.size(); ++r) {
      for (std::size_t c = 0; c < f.src.size(); ++c) {
        const std::size_t d = l.dim_at(r, c);
        if (d == 0) continue;
        Echelon e(d);
        for (const BitVec& b : ideal_[f.src[c] * cat_.size() + f.dst[r]]) e.insert(b);
        if (!e.contains(f.coords.slice(l.at(r, c), d))) return false;
      }
    }
    return true;
  }

  bool equal_in_quotient(const Mor& f, const Mor& g) const { return in_ideal(f + g); }

  QuotientSpace hom_mod_I(const Obj& x, const Obj& y) const {
    const std::size_t total = hom_dim(cat_, x, y);
    Echelon e(total);
    for (const BitVec& b : ideal_basis(x, y)) e.insert(b);
    QuotientSpace q;
    for (std::size_t t = 0; t < total; ++t) {
      if (e.insert(BitVec::unit(total, t))) q.reps.push_back(basis_mor(cat_, x, y, t));
    }
    q.dim = q.reps.size();
    return q;
  }
  std::size_t qdim(const Obj& x, const Obj& y) const { return hom_dim(cat_, x, y) - rank_of(ideal_basis(x, y), x, y); }

  const Reflection& sigma(int u) const {
    if (!p_.u().contains(u)) throw InputError("sigma: object is not in U");
    return sigma_[u];
  }
  const Reflection& omega(int t) const {
    if (!p_.t().contains(t)) throw InputError("omega: object is not in T");
    return omega_[t];
  }
  Reflection sigma_obj(const Obj& u) const {
    return sum_reflections(u, [&](int i) -> const Reflection& { return sigma(i); }, true);
  }
  Reflection omega_obj(const Obj& t) const {
    return sum_reflections(t, [&](int i) -> const Reflection& { return omega(i); }, false);
  }

  const BracketShift& bracket_up(int z) const {
    if (!derived_.z.contains(z)) throw InputError("bracket shift: object is not in Z");
    return up_[z];
  }
  const BracketShift& bracket_down(int z) const {
    if (!derived_.z.contains(z)) throw InputError("bracket shift: object is not in Z");
    return down_[z];
  }
  BracketShift bracket_up_obj(const Obj& z) const { return sum_brackets(z, true); }
  BracketShift bracket_down_obj(const Obj& z) const { return sum_brackets(z, false); }

  Obj Sigma_obj(const Obj& z) const {
    Obj out;
    for (int i : z) out = out + zi_class(sigma_obj(bracket_up(i).obj).obj);
    return out;
  }
  Obj Omega_obj(const Obj& z) const {
    Obj out;
    for (int i : z) out = out + zi_class(omega_obj(bracket_down(i).obj).obj);
    return out;
  }
  Subcat Sigma_set(const Subcat& s, int k = 1) const {
    Subcat cur = s;
    for (int step = 0; step < std::abs(k); ++step) {
      Subcat next;
      for (int i : cur.members()) next = next | Subcat::summands_of(k > 0 ? Sigma_obj(Obj::of(i)) : Omega_obj(Obj::of(i)));
      cur = next;
    }
    return cur;
  }

  // Σ on a morphism of Z: complete f to a map of ⟨1⟩-triangles, then apply σ.
  Mor Sigma_mor(const Mor& f) const {
    const BracketShift bx = bracket_up_obj(f.src);
    const BracketShift by = bracket_up_obj(f.dst);
    const Mor& ix = bx.tri.f;
    const Mor& iy = by.tri.f;
    const Mor target_a = compose(cat_, f, iy);
    const std::size_t da = hom_dim(cat_, bx.tri.b, by.tri.b);
    auto a_coef = solve_columns(
        da, target_a.coords.size(),
        [&](std::size_t j) { return compose(cat_, ix, basis_mor(cat_, bx.tri.b, by.tri.b, j)).coords; },
        target_a.coords);
    if (!a_coef) throw InternalError("Sigma_mor: map into the I-envelope does not extend");
    const Mor a{bx.tri.b, by.tri.b, *a_coef};

    const Mor lhs1 = compose(cat_, a, by.tri.g);
    const Mor lhs2 = compose(cat_, bx.tri.h, shift_mor(cat_, f, 1));
    const std::size_t dc = hom_dim(cat_, bx.obj, by.obj);
    auto c_coef = solve_columns(
        dc, lhs1.coords.size() + lhs2.coords.size(),
        [&](std::size_t j) {
          const Mor c = basis_mor(cat_, bx.obj, by.obj, j);
          return BitVec::concat(compose(cat_, bx.tri.g, c).coords, compose(cat_, c, by.tri.h).coords);
        },
        BitVec::concat(lhs1.coords, lhs2.coords));
    if (!c_coef) throw InternalError("Sigma_mor: morphism of triangles does not complete");
    const Mor c{bx.obj, by.obj, *c_coef};
    return sigma_mor(c);
  }

  // σ on a morphism of U: the d with d∘z_1 = z_2∘c.
  Mor sigma_mor(const Mor& c) const {
    const Reflection s1 = sigma_obj(c.src);
    const Reflection s2 = sigma_obj(c.dst);
    const Mor rhs = compose(cat_, c, s2.map);
    auto d = solve_columns(
        hom_dim(cat_, s1.obj, s2.obj), rhs.coords.size(),
        [&](std::size_t j) { return compose(cat_, s1.map, basis_mor(cat_, s1.obj, s2.obj, j)).coords; }, rhs.coords);
    if (!d) throw InternalError("sigma_mor: reflection does not factor");
    return {s1.obj, s2.obj, *d};
  }

  // Two-sided inverse modulo the ideal, found by one linear solve.
  bool iso_in_quotient(const Mor& f) const {
    const auto fa = ideal_basis(f.src, f.src);
    const auto fb = ideal_basis(f.dst, f.dst);
    const std::size_t dg = hom_dim(cat_, f.dst, f.src);
    const std::size_t la = hom_dim(cat_, f.src, f.src), lb = hom_dim(cat_, f.dst, f.dst);
    auto col = [&](std::size_t j) {
      if (j < dg) {
        const Mor g = basis_mor(cat_, f.dst, f.src, j);
        return BitVec::concat(compose(cat_, f, g).coords, compose(cat_, g, f).coords);
      }
      if (j < dg + fa.size()) return BitVec::concat(fa[j - dg], BitVec(lb));
      return BitVec::concat(BitVec(la), fb[j - dg - fa.size()]);
    };
    const BitVec rhs = BitVec::concat(identity(cat_, f.src).coords, identity(cat_, f.dst).coords);
    return solve_columns(dg + fa.size() + fb.size(), la + lb, col, rhs).has_value();
  }

  // Cone(f) ∈ I∗I[1].
  Verdict iso_by_cone(const Mor& f) const {
    const Tri t = cat_.cone(f);
    return star_.contains(derived_.i, shift_subcat(cat_, derived_.i, 1), t.c).verdict;
  }

  RightTriangle standard_right_triangle(const Mor& f) const {
    const BracketShift bx = bracket_up_obj(f.src);
    const Mor j = column(cat_, f, bx.tri.f);
    const Tri cone = cat_.cone(j);
    if (!p_.u().contains(cone.c)) throw InternalError("standard right triangle: cone is not in U");
    const Reflection s = sigma_obj(cone.c);
    const DirectSum ds = direct_sum(cat_, f.dst, bx.tri.b);
    RightTriangle r;
    r.x = f.src;
    r.y = f.dst;
    r.f = f;
    r.cone = cone.c;
    r.third = s.obj;
    r.second = compose(cat_, ds.in1, cone.g, s.map);
    return r;
  }

  LeftTriangle standard_left_triangle(const Mor& f) const {
    const BracketShift by = bracket_down_obj(f.dst);
    const Mor k = row(cat_, f, by.tri.g);
    const Tri cone = cat_.cone(k);  // X⊕I -> Y -> D -> (X⊕I)[1]
    const Obj cocone = shift_obj(cat_, cone.c, -1);
    if (!p_.t().contains(cocone)) throw InternalError("standard left triangle: cocone is not in T");
    const Reflection w = omega_obj(cocone);
    const DirectSum ds = direct_sum(cat_, f.src, by.tri.b);
    LeftTriangle l;
    l.x = f.src;
    l.y = f.dst;
    l.f = f;
    l.cocone = cocone;
    l.third = w.obj;
    l.first = compose(cat_, w.map, shift_mor(cat_, cone.h, -1), ds.pr1);
    return l;
  }

  std::size_t ext1_zi(const Obj& x, const Obj& y) const { return qdim(x, Sigma_obj(y)); }

  MuResult mu_map(const Obj& x) const {
    const Subcat v_up = shift_subcat(cat_, p_.v(), 1);
    const Subcat s_down = shift_subcat(cat_, p_.s(), -1);
    const StarResult wu = star_.contains(p_.u(), v_up, x);
    const StarResult wt = star_.contains(s_down, p_.t(), x);
    if (wu.verdict != Verdict::yes || wt.verdict != Verdict::yes) {
      throw InconclusiveError("mu: decomposition triangle not found for " + obj_to_string(cat_, x));
    }
    const Mor& ux = wu.witness->tri.f;  // U_X -> X
    const Mor& tx = wt.witness->tri.g;  // X -> T_X
    const Reflection su = sigma_obj(ux.src);
    const Reflection ot = omega_obj(tx.dst);
    const Mor rhs = compose(cat_, ux, tx);
    auto z = solve_columns(
        hom_dim(cat_, su.obj, ot.obj), rhs.coords.size(),
        [&](std::size_t j) { return compose(cat_, su.map, basis_mor(cat_, su.obj, ot.obj, j), ot.map).coords; },
        rhs.coords);
    if (!z) throw InternalError("mu: comparison diagram does not commute for " + obj_to_string(cat_, x));
    MuResult r;
    r.z = {su.obj, ot.obj, *z};
    r.iso = iso_in_quotient(r.z);
    r.cone_criterion = iso_by_cone(r.z);
    return r;
  }

  // (I): μ_X is an isomorphism for every indecomposable X of T∗U.
  Verdict check_condition_I() const {
    auto [tu, complete] = star_.star_indecs(p_.t(), p_.u());
    Verdict v = complete ? Verdict::yes : Verdict::inconclusive;
    for (int x : tu.members()) {
      if (!mu_map(Obj::of(x)).iso) return Verdict::no;
    }
    return v;
  }

 private:
  Tri witness(const Subcat& x, const Subcat& y, const Obj& c, const char* what) const {
    const StarResult r = star_.contains(x, y, c);
    if (r.verdict == Verdict::inconclusive) {
      throw InconclusiveError(std::string(what) + ": witness search inconclusive for " + obj_to_string(cat_, c));
    }
    if (r.verdict == Verdict::no) {
      throw DecompositionMissing(std::string(what) + ": decomposition missing for " + obj_to_string(cat_, c));
    }
    return r.witness->tri;
  }

  std::size_t rank_of(const std::vector<BitVec>& vs, const Obj& x, const Obj& y) const {
    Echelon e(hom_dim(cat_, x, y));
    for (const auto& v : vs) e.insert(v);
    return e.rank();
  }

  template <class Get>
  Reflection sum_reflections(const Obj& x, Get get, bool is_sigma) const {
    std::optional<Tri> acc;
    for (int i : x) {
      const Tri& t = get(i).tri;
      acc = acc ? tri_sum(cat_, *acc, t) : t;
    }
    if (!acc) acc = split_triangle(cat_, Obj{}, Obj{});
    if (is_sigma) return {acc->c, *acc, acc->g};
    return {acc->a, *acc, acc->f};
  }

  BracketShift sum_brackets(const Obj& z, bool up) const {
    std::optional<Tri> acc;
    for (int i : z) {
      const Tri& t = (up ? bracket_up(i) : bracket_down(i)).tri;
      acc = acc ? tri_sum(cat_, *acc, t) : t;
    }
    if (!acc) acc = split_triangle(cat_, Obj{}, Obj{});
    return {up ? acc->c : acc->a, *acc};
  }

  const PairEngine<B>& pe_;
  const StarOracle<B>& star_;
  const B& cat_;
  TwinPair p_;
  DerivedSets derived_;
  std::vector<std::vector<BitVec>> ideal_;
  std::vector<Reflection> sigma_, omega_;
  std::vector<BracketShift> up_, down_;
};

}  // namespace cotor
