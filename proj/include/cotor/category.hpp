#pragma once

// Objects, morphisms and triangles of a Krull-Schmidt category whose
// indecomposables are numbered 0..K-1, plus the backend contracts.

#include <algorithm>
#include <bit>
#include <cctype>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cotor/f2.hpp"

namespace cotor {

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};
struct DecompositionMissing : InternalError {
  using InternalError::InternalError;
};
// A capped search ended without a definite answer.
struct InconclusiveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Verdict : std::uint8_t { no, yes, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "no";
    case Verdict::yes: return "yes";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}
inline Verdict verdict_of(bool b) { return b ? Verdict::yes : Verdict::no; }

// Conjunction over the three values: a definite "no" dominates.
inline Verdict both(Verdict a, Verdict b) {
  if (a == Verdict::no || b == Verdict::no) return Verdict::no;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::yes;
}
inline Verdict either(Verdict a, Verdict b) {
  if (a == Verdict::yes || b == Verdict::yes) return Verdict::yes;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::no;
}
inline Verdict negate(Verdict a) {
  if (a == Verdict::inconclusive) return a;
  return a == Verdict::yes ? Verdict::no : Verdict::yes;
}

struct BackendCaps {
  bool morphism_calculus = false;
  bool exact_triangles = false;
};

// Finite direct sum of indecomposables, kept sorted.
class Obj {
 public:
  Obj() = default;
  explicit Obj(std::vector<int> s) : s_(std::move(s)) { std::sort(s_.begin(), s_.end()); }
  static Obj of(int id) { return Obj(std::vector<int>{id}); }
  static Obj repeat(int id, std::size_t times) { return Obj(std::vector<int>(times, id)); }

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  int operator[](std::size_t i) const { return s_[i]; }
  auto begin() const { return s_.begin(); }
  auto end() const { return s_.end(); }
  const std::vector<int>& summands() const { return s_; }

  std::size_t count(int id) const { return static_cast<std::size_t>(std::count(s_.begin(), s_.end(), id)); }

  friend Obj operator+(const Obj& a, const Obj& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::merge(a.s_.begin(), a.s_.end(), b.s_.begin(), b.s_.end(), std::back_inserter(out));
    Obj o;
    o.s_ = std::move(out);
    return o;
  }

  // Multiset inclusion.
  bool contains(const Obj& sub) const { return std::includes(s_.begin(), s_.end(), sub.s_.begin(), sub.s_.end()); }

  Obj minus(const Obj& sub) const {
    if (!contains(sub)) throw InputError("Obj::minus: not a summand");
    std::vector<int> out;
    std::set_difference(s_.begin(), s_.end(), sub.s_.begin(), sub.s_.end(), std::back_inserter(out));
    Obj o;
    o.s_ = std::move(out);
    return o;
  }

  template <class Pred>
  Obj filter(Pred keep) const {
    std::vector<int> out;
    std::copy_if(s_.begin(), s_.end(), std::back_inserter(out), keep);
    Obj o;
    o.s_ = std::move(out);
    return o;
  }

  friend bool operator==(const Obj&, const Obj&) = default;
  friend bool operator<(const Obj& a, const Obj& b) { return a.s_ < b.s_; }

 private:
  std::vector<int> s_;
};

// Full additive subcategory, identified with its set of indecomposables.
class Subcat {
 public:
  static constexpr int max_size = 64;

  Subcat() = default;
  static Subcat from_bits(std::uint64_t bits) {
    Subcat s;
    s.bits_ = bits;
    return s;
  }
  static Subcat all(int k) { return from_bits(k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1); }
  static Subcat of(std::initializer_list<int> ids) {
    Subcat s;
    for (int i : ids) s.insert(i);
    return s;
  }
  static Subcat summands_of(const Obj& x) {
    Subcat s;
    for (int i : x) s.insert(i);
    return s;
  }

  std::uint64_t bits() const { return bits_; }
  bool contains(int i) const { return (bits_ >> i) & 1u; }
  bool contains(const Obj& x) const {
    return std::all_of(x.begin(), x.end(), [&](int i) { return contains(i); });
  }
  void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  bool empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }
  bool subset_of(const Subcat& o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend Subcat operator|(Subcat a, Subcat b) { return from_bits(a.bits_ | b.bits_); }
  friend Subcat operator&(Subcat a, Subcat b) { return from_bits(a.bits_ & b.bits_); }
  friend Subcat operator-(Subcat a, Subcat b) { return from_bits(a.bits_ & ~b.bits_); }
  friend bool operator==(const Subcat&, const Subcat&) = default;
  friend bool operator<(const Subcat& a, const Subcat& b) { return a.bits_ < b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

// Hom(src,dst) is the direct sum of Hom(src[c], dst[r]) blocks, ordered by
// destination summand first, then source summand.
struct Mor {
  Obj src;
  Obj dst;
  BitVec coords;

  bool is_zero() const { return coords.none(); }
  friend bool operator==(const Mor&, const Mor&) = default;
};

struct Tri {
  Obj a, b, c;
  Mor f, g, h;  // a -> b -> c -> a[1]
  bool morphism_data = true;
};

// Minimal interface: a finite list of indecomposables with a shift permutation
// and a Hom-vanishing predicate.
template <class B>
concept IndecCategory = requires(const B& b, int i, int k) {
  { b.size() } -> std::convertible_to<int>;
  { b.label(i) } -> std::convertible_to<std::string>;
  { b.shift_indec(i, k) } -> std::convertible_to<int>;
  { b.hom_nonzero(i, i) } -> std::convertible_to<bool>;
  { b.caps() } -> std::same_as<BackendCaps>;
};

template <class B>
concept MorphismCategory = IndecCategory<B> && requires(const B& b, int i, std::size_t p) {
  { b.hom_dim_indec(i, i) } -> std::convertible_to<std::size_t>;
  { b.compose_basis(i, i, i, p, p) } -> std::convertible_to<const BitVec&>;
  { b.identity_indec(i) } -> std::convertible_to<const BitVec&>;
  { b.shift_matrix(i, i, 1) } -> std::convertible_to<const F2Matrix&>;
};

template <class B>
concept ExactTriangulated = MorphismCategory<B> && requires(const B& b, const Mor& f) {
  { b.cone(f) } -> std::same_as<Tri>;
};

template <IndecCategory B>
std::string obj_to_string(const B& cat, const Obj& x) {
  if (x.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += "+";
    s += cat.label(x[i]);
  }
  return s;
}

template <IndecCategory B>
std::vector<std::string> subcat_labels(const B& cat, const Subcat& s) {
  std::vector<std::string> out;
  for (int i : s.members()) out.push_back(cat.label(i));
  return out;
}

template <IndecCategory B>
int parse_label(const B& cat, const std::string& label) {
  for (int i = 0; i < cat.size(); ++i) {
    if (cat.label(i) == label) return i;
  }
  if constexpr (requires { cat.label_alias(label); }) {
    const int id = cat.label_alias(label);
    if (id >= 0) return id;
  }
  throw InputError("unknown indecomposable label: " + label);
}

template <IndecCategory B>
std::string subcat_string(const B& cat, const Subcat& s) {
  std::string out = "[";
  for (int i : s.members()) out += (out.size() > 1 ? "," : "") + cat.label(i);
  return out + "]";
}

// "[S0,M(0,2)]": commas inside parentheses belong to the label.
template <IndecCategory B>
Subcat parse_subcat(const B& cat, std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw InputError("subcategory must be written as [label,...]: " + text);
  }
  Subcat out;
  int depth = 0;
  std::string cur;
  for (std::size_t k = 1; k + 1 <= text.size(); ++k) {
    const char c = text[k];
    const bool end = k + 1 == text.size();
    if (end || (c == ',' && depth == 0)) {
      if (!cur.empty()) out.insert(parse_label(cat, cur));
      else if (!end) throw InputError("empty label in " + text);
      cur.clear();
      continue;
    }
    if (c == '(') ++depth;
    if (c == ')') --depth;
    cur += c;
  }
  return out;
}

// Shift with an explicit matching between summand positions: position i of X
// goes to position pos[i] of the result. Ties keep their relative order.
struct ShiftedObj {
  Obj obj;
  std::vector<std::size_t> pos;
};

template <IndecCategory B>
ShiftedObj shift_with_positions(const B& cat, const Obj& x, int step) {
  std::vector<std::pair<int, std::size_t>> keyed;
  keyed.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) keyed.emplace_back(cat.shift_indec(x[i], step), i);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  ShiftedObj out;
  out.pos.resize(x.size());
  std::vector<int> ids;
  for (std::size_t p = 0; p < keyed.size(); ++p) {
    ids.push_back(keyed[p].first);
    out.pos[keyed[p].second] = p;
  }
  out.obj = Obj(std::move(ids));
  return out;
}

template <IndecCategory B>
Obj shift_obj(const B& cat, const Obj& x, int k) {
  Obj cur = x;
  const int step = k >= 0 ? 1 : -1;
  for (int t = 0; t != k; t += step) cur = shift_with_positions(cat, cur, step).obj;
  return cur;
}

template <IndecCategory B>
Subcat shift_subcat(const B& cat, const Subcat& s, int k) {
  Subcat out;
  for (int i : s.members()) out.insert(cat.shift_indec(i, k));
  return out;
}

// Offsets of the (dst r, src c) blocks in the coordinate vector of Hom(X,Y).
struct BlockLayout {
  std::size_t rows = 0, cols = 0;
  std::vector<std::size_t> offset;
  std::vector<std::size_t> dim;
  std::size_t total = 0;

  std::size_t at(std::size_t r, std::size_t c) const { return offset[r * cols + c]; }
  std::size_t dim_at(std::size_t r, std::size_t c) const { return dim[r * cols + c]; }
};

template <MorphismCategory B>
BlockLayout block_layout(const B& cat, const Obj& x, const Obj& y) {
  BlockLayout l;
  l.rows = y.size();
  l.cols = x.size();
  l.offset.resize(l.rows * l.cols);
  l.dim.resize(l.rows * l.cols);
  for (std::size_t r = 0; r < l.rows; ++r) {
    for (std::size_t c = 0; c < l.cols; ++c) {
      l.offset[r * l.cols + c] = l.total;
      l.dim[r * l.cols + c] = cat.hom_dim_indec(x[c], y[r]);
      l.total += l.dim[r * l.cols + c];
    }
  }
  return l;
}

template <IndecCategory B>
std::size_t hom_dim(const B& cat, const Obj& x, const Obj& y) {
  if constexpr (MorphismCategory<B>) {
    std::size_t d = 0;
    for (int a : x) {
      for (int b : y) d += cat.hom_dim_indec(a, b);
    }
    return d;
  } else {
    (void)cat;
    (void)x;
    (void)y;
    throw Unsupported("hom_dim: backend has no morphism calculus");
  }
}

template <IndecCategory B>
bool hom_nonzero(const B& cat, const Obj& x, const Obj& y) {
  for (int a : x) {
    for (int b : y) {
      if (cat.hom_nonzero(a, b)) return true;
    }
  }
  return false;
}

template <IndecCategory B>
bool ext_nonzero(const B& cat, int a, int b) {
  return cat.hom_nonzero(a, cat.shift_indec(b, 1));
}

template <MorphismCategory B>
Mor zero_mor(const B& cat, const Obj& x, const Obj& y) {
  return {x, y, BitVec(hom_dim(cat, x, y))};
}

template <MorphismCategory B>
Mor basis_mor(const B& cat, const Obj& x, const Obj& y, std::size_t i) {
  return {x, y, BitVec::unit(hom_dim(cat, x, y), i)};
}

inline Mor operator+(const Mor& f, const Mor& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst)) throw InputError("Mor sum: endpoints differ");
  return {f.src, f.dst, f.coords ^ g.coords};
}

template <MorphismCategory B>
Mor identity(const B& cat, const Obj& x) {
  const BlockLayout l = block_layout(cat, x, x);
  BitVec v(l.total);
  for (std::size_t i = 0; i < x.size(); ++i) v.assign(l.at(i, i), cat.identity_indec(x[i]));
  return {x, x, std::move(v)};
}

// g∘f, bilinear through the structure constants of the indecomposable blocks.
template <MorphismCategory B>
Mor compose(const B& cat, const Mor& f, const Mor& g) {
  if (!(f.dst == g.src)) throw InputError("compose: codomain of f differs from domain of g");
  const BlockLayout lf = block_layout(cat, f.src, f.dst);
  const BlockLayout lg = block_layout(cat, g.src, g.dst);
  const BlockLayout lo = block_layout(cat, f.src, g.dst);
  BitVec out(lo.total);
  for (std::size_t r = 0; r < g.dst.size(); ++r) {
    for (std::size_t c = 0; c < f.src.size(); ++c) {
      const std::size_t ob = lo.at(r, c);
      const std::size_t od = lo.dim_at(r, c);
      if (od == 0) continue;
      BitVec acc(od);
      for (std::size_t k = 0; k < f.dst.size(); ++k) {
        const std::size_t fo = lf.at(k, c), fd = lf.dim_at(k, c);
        const std::size_t go = lg.at(r, k), gd = lg.dim_at(r, k);
        for (std::size_t i = 0; i < fd; ++i) {
          if (!f.coords.get(fo + i)) continue;
          for (std::size_t j = 0; j < gd; ++j) {
            if (g.coords.get(go + j)) acc ^= cat.compose_basis(f.src[c], f.dst[k], g.dst[r], i, j);
          }
        }
      }
      for (std::size_t t = acc.first_set(); t < od; t = acc.next_set(t + 1)) out.flip(ob + t);
    }
  }
  return {f.src, g.dst, std::move(out)};
}

template <MorphismCategory B>
Mor compose(const B& cat, const Mor& f, const Mor& g, const Mor& h) {
  return compose(cat, compose(cat, f, g), h);
}

template <MorphismCategory B>
Mor shift_mor(const B& cat, const Mor& f, int k) {
  Mor cur = f;
  const int step = k >= 0 ? 1 : -1;
  for (int t = 0; t != k; t += step) {
    const ShiftedObj s = shift_with_positions(cat, cur.src, step);
    const ShiftedObj d = shift_with_positions(cat, cur.dst, step);
    const BlockLayout lin = block_layout(cat, cur.src, cur.dst);
    const BlockLayout lout = block_layout(cat, s.obj, d.obj);
    BitVec out(lout.total);
    for (std::size_t r = 0; r < cur.dst.size(); ++r) {
      for (std::size_t c = 0; c < cur.src.size(); ++c) {
        const std::size_t dim = lin.dim_at(r, c);
        if (dim == 0) continue;
        const BitVec block = cur.coords.slice(lin.at(r, c), dim);
        out.assign(lout.at(d.pos[r], s.pos[c]), cat.shift_matrix(cur.src[c], cur.dst[r], step) * block);
      }
    }
    cur = {s.obj, d.obj, std::move(out)};
  }
  return cur;
}

// X ⊕ Y in canonical order with its injections and projections.
struct DirectSum {
  Obj sum;
  Mor in1, in2, pr1, pr2;
};

template <MorphismCategory B>
DirectSum direct_sum(const B& cat, const Obj& x, const Obj& y) {
  std::vector<std::pair<int, std::size_t>> keyed;
  for (std::size_t i = 0; i < x.size(); ++i) keyed.emplace_back(x[i], i);
  for (std::size_t i = 0; i < y.size(); ++i) keyed.emplace_back(y[i], x.size() + i);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<std::size_t> pos(keyed.size());
  for (std::size_t p = 0; p < keyed.size(); ++p) pos[keyed[p].second] = p;
  DirectSum ds;
  ds.sum = x + y;
  auto injection = [&](const Obj& part, std::size_t shift) {
    const BlockLayout l = block_layout(cat, part, ds.sum);
    BitVec v(l.total);
    for (std::size_t i = 0; i < part.size(); ++i) v.assign(l.at(pos[shift + i], i), cat.identity_indec(part[i]));
    return Mor{part, ds.sum, std::move(v)};
  };
  auto projection = [&](const Obj& part, std::size_t shift) {
    const BlockLayout l = block_layout(cat, ds.sum, part);
    BitVec v(l.total);
    for (std::size_t i = 0; i < part.size(); ++i) v.assign(l.at(i, pos[shift + i]), cat.identity_indec(part[i]));
    return Mor{ds.sum, part, std::move(v)};
  };
  ds.in1 = injection(x, 0);
  ds.in2 = injection(y, x.size());
  ds.pr1 = projection(x, 0);
  ds.pr2 = projection(y, x.size());
  return ds;
}

// f1 ⊕ f2 : X1⊕X2 -> Y1⊕Y2.
template <MorphismCategory B>
Mor block_diag(const B& cat, const Mor& f1, const Mor& f2) {
  const DirectSum s = direct_sum(cat, f1.src, f2.src);
  const DirectSum d = direct_sum(cat, f1.dst, f2.dst);
  return compose(cat, s.pr1, f1, d.in1) + compose(cat, s.pr2, f2, d.in2);
}

// [f; g] : X -> Y1⊕Y2 and [f g] : X1⊕X2 -> Y.
template <MorphismCategory B>
Mor column(const B& cat, const Mor& f, const Mor& g) {
  const DirectSum d = direct_sum(cat, f.dst, g.dst);
  return compose(cat, f, d.in1) + compose(cat, g, d.in2);
}
template <MorphismCategory B>
Mor row(const B& cat, const Mor& f, const Mor& g) {
  const DirectSum s = direct_sum(cat, f.src, g.src);
  return compose(cat, s.pr1, f) + compose(cat, s.pr2, g);
}

// Matrix of a linear map between Hom spaces, built column by column.
template <class Fn>
F2Matrix linear_map_matrix(std::size_t dom, std::size_t cod, Fn&& apply_to_basis) {
  F2Matrix m(cod, dom);
  for (std::size_t j = 0; j < dom; ++j) {
    const BitVec col = apply_to_basis(j);
    for (std::size_t i = col.first_set(); i < cod; i = col.next_set(i + 1)) m.set(i, j);
  }
  return m;
}

template <MorphismCategory B>
bool is_isomorphism(const B& cat, const Mor& f) {
  if (!cat.caps().morphism_calculus) throw Unsupported("is_isomorphism: no morphism calculus");
  if (!(f.src == f.dst)) return false;
  const std::size_t dg = hom_dim(cat, f.dst, f.src);
  const std::size_t d1 = hom_dim(cat, f.src, f.src);
  const std::size_t d2 = hom_dim(cat, f.dst, f.dst);
  F2Matrix m = linear_map_matrix(dg, d1 + d2, [&](std::size_t j) {
    const Mor g = basis_mor(cat, f.dst, f.src, j);
    return BitVec::concat(compose(cat, f, g).coords, compose(cat, g, f).coords);
  });
  const BitVec rhs = BitVec::concat(identity(cat, f.src).coords, identity(cat, f.dst).coords);
  return f2::solve(m, rhs).has_value();
}

template <MorphismCategory B>
Tri rotate(const B& cat, const Tri& t) {
  return {t.b, t.c, shift_obj(cat, t.a, 1), t.g, t.h, shift_mor(cat, t.f, 1), t.morphism_data};
}

// Direct sum of two triangles.
template <MorphismCategory B>
Tri tri_sum(const B& cat, const Tri& t1, const Tri& t2) {
  const DirectSum a = direct_sum(cat, t1.a, t2.a);
  const DirectSum b = direct_sum(cat, t1.b, t2.b);
  const DirectSum c = direct_sum(cat, t1.c, t2.c);
  Tri out;
  out.a = a.sum;
  out.b = b.sum;
  out.c = c.sum;
  out.f = compose(cat, a.pr1, t1.f, b.in1) + compose(cat, a.pr2, t2.f, b.in2);
  out.g = compose(cat, b.pr1, t1.g, c.in1) + compose(cat, b.pr2, t2.g, c.in2);
  out.h = compose(cat, c.pr1, t1.h, shift_mor(cat, a.in1, 1)) + compose(cat, c.pr2, t2.h, shift_mor(cat, a.in2, 1));
  out.morphism_data = t1.morphism_data && t2.morphism_data;
  return out;
}

// The split triangle X -> X⊕Y -> Y -> X[1].
template <MorphismCategory B>
Tri split_triangle(const B& cat, const Obj& x, const Obj& y) {
  const DirectSum s = direct_sum(cat, x, y);
  return {x, s.sum, y, s.in1, s.pr2, zero_mor(cat, y, shift_obj(cat, x, 1)), true};
}

template <MorphismCategory B>
bool composites_vanish(const B& cat, const Tri& t) {
  return compose(cat, t.f, t.g).is_zero() && compose(cat, t.g, t.h).is_zero() &&
         compose(cat, t.h, shift_mor(cat, t.f, 1)).is_zero();
}

}  // namespace cotor
