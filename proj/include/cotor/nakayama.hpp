#pragma once

// Stable module category of the self-injective Nakayama algebra Λ(m,n) over F2:
// cyclic quiver on m vertices, relations all paths of length n.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cotor/category.hpp"
#include "cotor/f2.hpp"

namespace cotor {

struct NakayamaParams {
  int m = 1;
  int n = 2;
};

// Graded vector space with the arrow action; basis vector k sits at vertex deg[k]
// and the action raises the vertex by one.
struct RawModule {
  std::vector<int> deg;
  F2Matrix x;

  std::size_t dim() const { return deg.size(); }
};

inline int mod_vertex(int v, int m) { return ((v % m) + m) % m; }

// M(top,len): basis e_0..e_{len-1}, e_k at vertex top+k, arrow e_k -> e_{k+1}.
inline RawModule uniserial(int m, int top, int len) {
  RawModule r;
  r.x = F2Matrix(len, len);
  for (int k = 0; k < len; ++k) {
    r.deg.push_back(mod_vertex(top + k, m));
    if (k + 1 < len) r.x.set(k + 1, k);
  }
  return r;
}

inline F2Matrix block_diagonal(const std::vector<F2Matrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  F2Matrix out(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    out.paste(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

inline RawModule raw_sum(const std::vector<RawModule>& parts) {
  RawModule out;
  std::vector<F2Matrix> xs;
  for (const auto& p : parts) {
    out.deg.insert(out.deg.end(), p.deg.begin(), p.deg.end());
    xs.push_back(p.x);
  }
  out.x = block_diagonal(xs);
  return out;
}

// phi : M -> N as an N.dim x M.dim matrix.
inline bool is_module_map(const RawModule& m, const RawModule& n, const F2Matrix& phi) {
  if (phi.rows() != n.dim() || phi.cols() != m.dim()) return false;
  for (std::size_t r = 0; r < phi.rows(); ++r) {
    for (std::size_t c = 0; c < phi.cols(); ++c) {
      if (phi.get(r, c) && n.deg[r] != m.deg[c]) return false;
    }
  }
  return phi * m.x == n.x * phi;
}

inline std::vector<F2Matrix> raw_hom_basis(const RawModule& m, const RawModule& n) {
  const std::size_t dm = m.dim(), dn = n.dim();
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t r = 0; r < dn; ++r) {
    for (std::size_t c = 0; c < dm; ++c) {
      if (n.deg[r] == m.deg[c]) vars.emplace_back(r, c);
    }
  }
  // Equation (r,c) of phi*X_M - X_N*phi = 0.
  F2Matrix eq(dn * dm, vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const auto [r0, c0] = vars[v];
    for (std::size_t c = 0; c < dm; ++c) {
      if (m.x.get(c0, c)) eq.row(r0 * dm + c).flip(v);
    }
    for (std::size_t r = 0; r < dn; ++r) {
      if (n.x.get(r, r0)) eq.row(r * dm + c0).flip(v);
    }
  }
  std::vector<F2Matrix> out;
  for (const BitVec& k : f2::kernel_basis(eq)) {
    F2Matrix phi(dn, dm);
    for (std::size_t v = k.first_set(); v < vars.size(); v = k.next_set(v + 1)) phi.set(vars[v].first, vars[v].second);
    out.push_back(std::move(phi));
  }
  return out;
}

inline F2Matrix matrix_power(const F2Matrix& x, int k) {
  F2Matrix p = F2Matrix::identity(x.rows());
  for (int i = 0; i < k; ++i) p = x * p;
  return p;
}

// Change of basis exhibiting a module as a direct sum of uniserials.
struct JordanDecomposition {
  std::vector<std::pair<int, int>> blocks;  // (top vertex, length), in column order
  F2Matrix basis;                           // column block k: gen, X gen, X^2 gen, ...
};

inline JordanDecomposition jordan_decompose(const RawModule& mod, int m, int n) {
  const std::size_t d = mod.dim();
  if (!matrix_power(mod.x, n).is_zero()) throw InputError("jordan_decompose: arrow action violates the relations");
  std::vector<F2Matrix> powers;
  for (int j = 0; j <= n + 1; ++j) powers.push_back(matrix_power(mod.x, j));

  std::vector<std::vector<std::size_t>> at_vertex(m);
  for (std::size_t k = 0; k < d; ++k) at_vertex[mod.deg[k]].push_back(k);

  // kernels[j][v]: basis of ker X^j inside the vertex-v part.
  std::vector<std::vector<std::vector<BitVec>>> kernels(n + 2, std::vector<std::vector<BitVec>>(m));
  for (int j = 0; j <= n + 1; ++j) {
    for (int v = 0; v < m; ++v) {
      const auto& idx = at_vertex[v];
      F2Matrix restricted(d, idx.size());
      for (std::size_t t = 0; t < idx.size(); ++t) {
        for (std::size_t r = 0; r < d; ++r) restricted.set(r, t, powers[j].get(r, idx[t]));
      }
      for (const BitVec& kv : f2::kernel_basis(restricted)) {
        BitVec full(d);
        for (std::size_t t = kv.first_set(); t < idx.size(); t = kv.next_set(t + 1)) full.set(idx[t]);
        kernels[j][v].push_back(std::move(full));
      }
    }
  }

  struct Gen {
    int top, len;
    BitVec v;
  };
  std::vector<Gen> gens;
  for (int len = n; len >= 1; --len) {
    for (int v = 0; v < m; ++v) {
      Echelon e(d);
      for (const auto& w : kernels[len - 1][v]) e.insert(w);
      for (const auto& w : kernels[len + 1][mod_vertex(v - 1, m)]) e.insert(mod.x * w);
      for (const auto& w : kernels[len][v]) {
        if (e.insert(w)) gens.push_back({v, len, w});
      }
    }
  }

  auto key = [&](const Gen& g) { return g.len == n ? m * (n - 1) + g.top : g.top * (n - 1) + (g.len - 1); };
  std::stable_sort(gens.begin(), gens.end(), [&](const Gen& a, const Gen& b) { return key(a) < key(b); });

  JordanDecomposition out;
  std::vector<BitVec> cols;
  for (const auto& g : gens) {
    out.blocks.emplace_back(g.top, g.len);
    BitVec cur = g.v;
    for (int t = 0; t < g.len; ++t) {
      cols.push_back(cur);
      cur = mod.x * cur;
    }
  }
  if (cols.size() != d) throw InternalError("jordan_decompose: chain basis has wrong size");
  out.basis = F2Matrix::from_columns(d, cols);
  if (!f2::inverse(out.basis)) throw InternalError("jordan_decompose: chains are not independent");
  return out;
}

// Multiplicities from ranks of restricted path actions; independent of the chain basis.
struct ModuleDecomposition {
  std::map<std::pair<int, int>, int> multiplicity;  // (top, length) -> count
};

inline ModuleDecomposition rank_decompose(const RawModule& mod, int m, int n) {
  std::vector<std::vector<std::size_t>> at_vertex(m);
  for (std::size_t k = 0; k < mod.dim(); ++k) at_vertex[mod.deg[k]].push_back(k);
  auto rho = [&](int v, int k) -> int {
    const F2Matrix p = matrix_power(mod.x, k);
    const auto& idx = at_vertex[mod_vertex(v, m)];
    F2Matrix restricted(mod.dim(), idx.size());
    for (std::size_t t = 0; t < idx.size(); ++t) {
      for (std::size_t r = 0; r < mod.dim(); ++r) restricted.set(r, t, p.get(r, idx[t]));
    }
    return static_cast<int>(f2::rank(restricted));
  };
  // Tops at vertex v of chains of length >= len.
  auto tops_at_least = [&](int v, int len) { return rho(v, len - 1) - rho(v - 1, len); };
  ModuleDecomposition out;
  for (int v = 0; v < m; ++v) {
    for (int len = 1; len <= n; ++len) {
      const int mult = tops_at_least(v, len) - (len < n ? tops_at_least(v, len + 1) : 0);
      if (mult < 0) throw InternalError("rank_decompose: negative multiplicity");
      if (mult > 0) out.multiplicity[{v, len}] = mult;
    }
  }
  return out;
}

class Nakayama {
 public:
  explicit Nakayama(NakayamaParams p, int size_cap = 24) : p_(p) {
    if (p.m < 1 || p.n < 2) throw InputError("nakayama: need m >= 1 and n >= 2");
    if (p.m * (p.n - 1) > size_cap) throw InputError("nakayama: indecomposable count exceeds the size cap");
    k_ = p.m * (p.n - 1);
    build();
  }

  const NakayamaParams& params() const { return p_; }
  std::string spec() const { return "nakayama:m=" + std::to_string(p_.m) + ",n=" + std::to_string(p_.n); }
  BackendCaps caps() const { return {true, true}; }
  int size() const { return k_; }

  int id_of(int top, int len) const {
    if (len < 1 || len >= p_.n) throw InputError("nakayama: length out of range");
    return mod_vertex(top, p_.m) * (p_.n - 1) + (len - 1);
  }
  int top(int id) const { return id / (p_.n - 1); }
  int length(int id) const { return id % (p_.n - 1) + 1; }

  std::string label(int id) const {
    if (length(id) == 1) return "S" + std::to_string(top(id));
    return "M(" + std::to_string(top(id)) + "," + std::to_string(length(id)) + ")";
  }
  int label_alias(const std::string& s) const {
    for (int i = 0; i < k_; ++i) {
      if (s == "M(" + std::to_string(top(i)) + "," + std::to_string(length(i)) + ")") return i;
    }
    return -1;
  }

  int shift_indec(int id, int k) const {
    int cur = id;
    for (int t = 0; t < k; ++t) cur = shift_[cur];
    for (int t = 0; t > k; --t) cur = unshift_[cur];
    return cur;
  }
  std::size_t hom_dim_indec(int a, int b) const { return hom_[a * k_ + b].reps.size(); }
  bool hom_nonzero(int a, int b) const { return hom_dim_indec(a, b) != 0; }

  const BitVec& compose_basis(int a, int b, int c, std::size_t i, std::size_t j) const {
    return compose_[(a * k_ + b) * k_ + c][i * hom_dim_indec(b, c) + j];
  }
  const BitVec& identity_indec(int a) const { return identity_[a]; }
  const F2Matrix& shift_matrix(int a, int b, int k) const {
    if (k == 1) return shift_up_[a * k_ + b];
    if (k == -1) return shift_down_[a * k_ + b];
    throw InputError("shift_matrix: only single steps are tabulated");
  }

  struct StableHomEntry {
    std::size_t raw_dim = 0;
    std::size_t projective_dim = 0;
    std::size_t stable_dim = 0;
  };
  StableHomEntry stable_hom_entry(int a, int b) const {
    const auto& h = hom_[a * k_ + b];
    return {h.raw_dim, h.proj.size(), h.reps.size()};
  }
  const std::vector<F2Matrix>& hom_reps(int a, int b) const { return hom_[a * k_ + b].reps; }
  const std::vector<F2Matrix>& projective_factoring_basis(int a, int b) const { return hom_[a * k_ + b].proj; }

  RawModule module_of(int id) const { return uniserial(p_.m, top(id), length(id)); }
  RawModule module_of(const Obj& x) const {
    std::vector<RawModule> parts;
    for (int i : x) parts.push_back(module_of(i));
    return raw_sum(parts);
  }
  // Injective envelope of an indecomposable, with its embedding.
  RawModule envelope(int id) const { return uniserial(p_.m, env_[id].top, p_.n); }
  const F2Matrix& envelope_embedding(int id) const { return env_[id].iota; }

  // Representative module map of a stable morphism.
  F2Matrix raw_rep(const Mor& f) const {
    const auto ox = offsets(f.src), oy = offsets(f.dst);
    F2Matrix out(oy.back(), ox.back());
    const BlockLayout l = block_layout(*this, f.src, f.dst);
    for (std::size_t r = 0; r < f.dst.size(); ++r) {
      for (std::size_t c = 0; c < f.src.size(); ++c) {
        const auto& reps = hom_reps(f.src[c], f.dst[r]);
        F2Matrix block(length(f.dst[r]), length(f.src[c]));
        for (std::size_t i = 0; i < reps.size(); ++i) {
          if (f.coords.get(l.at(r, c) + i)) block += reps[i];
        }
        out.paste(oy[r], ox[c], block);
      }
    }
    return out;
  }

  // Stable class of a module map between the standard models of x and y.
  Mor stable_class(const Obj& x, const Obj& y, const F2Matrix& raw) const {
    const auto ox = offsets(x), oy = offsets(y);
    if (raw.rows() != oy.back() || raw.cols() != ox.back()) throw InputError("stable_class: matrix shape mismatch");
    const BlockLayout l = block_layout(*this, x, y);
    BitVec coords(l.total);
    for (std::size_t r = 0; r < y.size(); ++r) {
      for (std::size_t c = 0; c < x.size(); ++c) {
        const auto& h = hom_[x[c] * k_ + y[r]];
        if (h.reps.empty()) continue;
        const F2Matrix block = raw.submatrix(oy[r], length(y[r]), ox[c], length(x[c]));
        coords.assign(l.at(r, c), h.extract * block.flatten());
      }
    }
    return {x, y, std::move(coords)};
  }

  // Triangle X -> Y -> C -> X[1] from the pushout of the injective envelope of X along f.
  Tri cone(const Mor& f) const {
    const Obj& x = f.src;
    const Obj& y = f.dst;
    const std::size_t dx = offsets(x).back(), dy = offsets(y).back();
    const F2Matrix phi = raw_rep(f);

    std::vector<RawModule> env_parts;
    std::vector<F2Matrix> iotas;
    for (int i : x) {
      env_parts.push_back(envelope(i));
      iotas.push_back(env_[i].iota);
    }
    const RawModule ix = raw_sum(env_parts);
    const F2Matrix iota = block_diagonal(iotas);

    // Quotient I(X) -> X[1], rows arranged in the canonical order of X[1].
    const ShiftedObj x1 = shift_with_positions(*this, x, 1);
    const auto o1 = offsets(x1.obj);
    F2Matrix quot(o1.back(), ix.dim());
    for (std::size_t c = 0; c < x.size(); ++c) quot.paste(o1[x1.pos[c]], static_cast<std::size_t>(p_.n) * c, env_[x[c]].quot);

    const RawModule y_raw = module_of(y);
    const RawModule w = raw_sum({y_raw, ix});
    F2Matrix j(w.dim(), dx);
    j.paste(0, 0, phi);
    j.paste(dy, 0, iota);

    const Cokernel ck = cokernel(w, j);
    const F2Matrix g_raw = ck.pi.submatrix(0, ck.mod.dim(), 0, dy);
    const F2Matrix h_raw = quot * ck.section.submatrix(dy, ix.dim(), 0, ck.mod.dim());

    const JordanDecomposition jd = jordan_decompose(ck.mod, p_.m, p_.n);
    const F2Matrix inv = *f2::inverse(jd.basis);
    std::vector<int> ids;
    std::vector<BitVec> alpha_cols;
    std::vector<BitVec> beta_rows;
    std::size_t col = 0;
    for (const auto& [tv, len] : jd.blocks) {
      if (len < p_.n) {
        ids.push_back(id_of(tv, len));
        for (int t = 0; t < len; ++t) {
          alpha_cols.push_back(jd.basis.column(col + t));
          beta_rows.push_back(inv.row(col + t));
        }
      }
      col += static_cast<std::size_t>(len);
    }
    const Obj c_obj(ids);
    const F2Matrix alpha = F2Matrix::from_columns(ck.mod.dim(), alpha_cols);
    const F2Matrix beta = F2Matrix::from_rows(ck.mod.dim(), beta_rows);

    Tri t;
    t.a = x;
    t.b = y;
    t.c = c_obj;
    t.f = f;
    t.g = stable_class(y, c_obj, beta * g_raw);
    t.h = stable_class(c_obj, x1.obj, h_raw * alpha);
    t.morphism_data = true;
    return t;
  }

 private:
  struct HomEntry {
    std::size_t raw_dim = 0;
    std::vector<F2Matrix> reps;  // complement of the projective-factoring maps
    std::vector<F2Matrix> proj;  // maps factoring through a projective
    F2Matrix extract;            // flattened raw map -> stable coordinates
  };
  struct EnvelopeData {
    int top = 0;
    F2Matrix iota;     // M(a) -> I(a)
    F2Matrix quot;     // I(a) -> M(a[1]), kernel = image of iota
    F2Matrix section;  // linear section of quot
  };
  struct Cokernel {
    RawModule mod;
    F2Matrix pi;       // W -> W/im j
    F2Matrix section;  // W/im j -> W, linear
  };

  std::vector<std::size_t> offsets(const Obj& x) const {
    std::vector<std::size_t> o{0};
    for (int i : x) o.push_back(o.back() + static_cast<std::size_t>(length(i)));
    return o;  // last entry is the total dimension
  }

  // Cokernel of an injective module map j : A -> W, using standard basis vectors of W as complement.
  static Cokernel cokernel(const RawModule& w, const F2Matrix& j) {
    const std::size_t d = w.dim();
    Echelon e(d);
    std::vector<BitVec> cols;
    for (std::size_t c = 0; c < j.cols(); ++c) {
      if (!e.insert(j.column(c))) throw InternalError("cokernel: map is not injective");
      cols.push_back(j.column(c));
    }
    std::vector<std::size_t> comp;
    for (std::size_t t = 0; t < d; ++t) {
      BitVec u = BitVec::unit(d, t);
      if (e.insert(u)) {
        comp.push_back(t);
        cols.push_back(std::move(u));
      }
    }
    const F2Matrix full = F2Matrix::from_columns(d, cols);
    const F2Matrix inv = *f2::inverse(full);
    Cokernel ck;
    ck.pi = inv.submatrix(j.cols(), comp.size(), 0, d);
    ck.section = F2Matrix(d, comp.size());
    for (std::size_t t = 0; t < comp.size(); ++t) {
      ck.section.set(comp[t], t);
      ck.mod.deg.push_back(w.deg[comp[t]]);
    }
    ck.mod.x = ck.pi * w.x * ck.section;
    return ck;
  }

  void build() {
    const int k = k_;
    env_.resize(k);
    shift_.resize(k);
    unshift_.resize(k);
    for (int a = 0; a < k; ++a) build_envelope(a);
    for (int a = 0; a < k; ++a) unshift_[shift_[a]] = a;

    hom_.resize(static_cast<std::size_t>(k) * k);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) build_hom(a, b);
    }
    identity_.resize(k);
    for (int a = 0; a < k; ++a) {
      identity_[a] = hom_[a * k + a].extract * F2Matrix::identity(length(a)).flatten();
    }
    compose_.resize(static_cast<std::size_t>(k) * k * k);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        for (int c = 0; c < k; ++c) {
          auto& table = compose_[(a * k + b) * k + c];
          const auto& ab = hom_[a * k + b];
          const auto& bc = hom_[b * k + c];
          const auto& ac = hom_[a * k + c];
          for (const auto& fi : ab.reps) {
            for (const auto& gj : bc.reps) {
              table.push_back(ac.reps.empty() ? BitVec(0) : ac.extract * (gj * fi).flatten());
            }
          }
        }
      }
    }
    shift_up_.resize(static_cast<std::size_t>(k) * k);
    shift_down_.resize(static_cast<std::size_t>(k) * k);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) build_shift(a, b);
    }
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        const int a0 = unshift_[a], b0 = unshift_[b];
        auto inv = f2::inverse(shift_up_[a0 * k + b0]);
        if (!inv) throw InternalError("nakayama: shift is not bijective on a Hom space");
        shift_down_[a * k + b] = *inv;
      }
    }
  }

  void build_envelope(int a) {
    const int n = p_.n;
    const int socle_vertex = top(a) + length(a) - 1;
    EnvelopeData& e = env_[a];
    e.top = mod_vertex(socle_vertex - (n - 1), p_.m);
    const RawModule src = module_of(a);
    const RawModule inj = uniserial(p_.m, e.top, n);
    const auto basis = raw_hom_basis(src, inj);
    bool found = false;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << basis.size()) && !found; ++mask) {
      F2Matrix cand(inj.dim(), src.dim());
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if ((mask >> i) & 1u) cand += basis[i];
      }
      if (f2::rank(cand) == src.dim()) {
        e.iota = cand;
        found = true;
      }
    }
    if (!found) throw InternalError("nakayama: no injective envelope embedding");
    const Cokernel ck = cokernel(inj, e.iota);
    const JordanDecomposition jd = jordan_decompose(ck.mod, p_.m, n);
    if (jd.blocks.size() != 1 || jd.blocks[0].second >= n) throw InternalError("nakayama: cosyzygy is not indecomposable");
    shift_[a] = id_of(jd.blocks[0].first, jd.blocks[0].second);
    const F2Matrix inv = *f2::inverse(jd.basis);
    e.quot = inv * ck.pi;
    e.section = ck.section * jd.basis;
  }

  void build_hom(int a, int b) {
    HomEntry& h = hom_[a * k_ + b];
    const RawModule ma = module_of(a), mb = module_of(b);
    const auto raw = raw_hom_basis(ma, mb);
    h.raw_dim = raw.size();
    const std::size_t flat = ma.dim() * mb.dim();
    Echelon proj(flat);
    for (const auto& psi : raw_hom_basis(envelope(a), mb)) {
      const F2Matrix through = psi * env_[a].iota;
      if (proj.insert(through.flatten())) h.proj.push_back(through);
    }
    for (const auto& phi : raw) {
      if (proj.insert(phi.flatten())) h.reps.push_back(phi);
    }
    if (h.reps.empty()) return;
    std::vector<BitVec> cols;
    for (const auto& r : h.reps) cols.push_back(r.flatten());
    for (const auto& q : h.proj) cols.push_back(q.flatten());
    const auto left = f2::left_inverse(F2Matrix::from_columns(flat, cols));
    if (!left) throw InternalError("nakayama: stable basis is not independent");
    h.extract = left->submatrix(0, h.reps.size(), 0, flat);
  }

  void build_shift(int a, int b) {
    const int a1 = shift_[a], b1 = shift_[b];
    const auto& src = hom_[a * k_ + b];
    const std::size_t d1 = hom_dim_indec(a1, b1);
    F2Matrix m(d1, src.reps.size());
    if (src.reps.empty()) {
      shift_up_[a * k_ + b] = m;
      return;
    }
    const auto ext = raw_hom_basis(envelope(a), envelope(b));
    const F2Matrix& ia = env_[a].iota;
    const F2Matrix& ib = env_[b].iota;
    std::vector<BitVec> cols;
    for (const auto& psi : ext) cols.push_back((psi * ia).flatten());
    const F2Matrix sys = F2Matrix::from_columns(static_cast<std::size_t>(p_.n) * length(a), cols);
    for (std::size_t i = 0; i < src.reps.size(); ++i) {
      const auto coeff = f2::solve(sys, (ib * src.reps[i]).flatten());
      if (!coeff) throw InternalError("nakayama: envelope map does not extend");
      F2Matrix psi(p_.n, p_.n);
      for (std::size_t t = coeff->first_set(); t < ext.size(); t = coeff->next_set(t + 1)) psi += ext[t];
      const F2Matrix induced = env_[b].quot * psi * env_[a].section;
      const BitVec v = d1 ? hom_[a1 * k_ + b1].extract * induced.flatten() : BitVec(0);
      for (std::size_t r = v.first_set(); r < d1; r = v.next_set(r + 1)) m.set(r, i);
    }
    shift_up_[a * k_ + b] = m;
  }

  NakayamaParams p_;
  int k_ = 0;
  std::vector<EnvelopeData> env_;
  std::vector<int> shift_, unshift_;
  std::vector<HomEntry> hom_;
  std::vector<BitVec> identity_;
  std::vector<std::vector<BitVec>> compose_;
  std::vector<F2Matrix> shift_up_, shift_down_;
};

}  // namespace cotor
