#pragma once

// Dense linear algebra over the two-element field with word-packed rows.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cotor {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static BitVec unit(std::size_t n, std::size_t i) {
    BitVec v(n);
    v.set(i);
    return v;
  }

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  bool none() const { return !any(); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Index of the lowest set bit at or after `from`, or size() when there is none.
  std::size_t next_set(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) {
        const std::size_t idx = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        return idx < n_ ? idx : n_;
      }
      if (++wi >= words_.size()) return n_;
      w = words_[wi];
    }
  }
  std::size_t first_set() const { return next_set(0); }

  BitVec& operator^=(const BitVec& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  // Parity of the bitwise AND.
  bool dot(const BitVec& o) const {
    check_same(o);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
    return std::popcount(acc) & 1;
  }

  // Copies `len` bits starting at `from` into a new vector.
  BitVec slice(std::size_t from, std::size_t len) const {
    BitVec out(len);
    for (std::size_t i = next_set(from); i < from + len && i < n_; i = next_set(i + 1)) out.set(i - from);
    return out;
  }
  // Writes `src` into this vector starting at `at` (overwrites).
  void assign(std::size_t at, const BitVec& src) {
    for (std::size_t i = 0; i < src.size(); ++i) set(at + i, src.get(i));
  }
  static BitVec concat(const BitVec& a, const BitVec& b) {
    BitVec out(a.size() + b.size());
    out.assign(0, a);
    out.assign(a.size(), b);
    return out;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) { return a.n_ == b.n_ && a.words_ == b.words_; }
  friend bool operator<(const BitVec& a, const BitVec& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.words_ < b.words_;
  }

  std::size_t hash() const {
    std::size_t h = n_ * 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void check_same(const BitVec& o) const {
    if (o.n_ != n_) throw std::invalid_argument("BitVec: length mismatch");
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  static F2Matrix identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }
  static F2Matrix from_rows(std::size_t cols, std::vector<BitVec> rows) {
    F2Matrix m;
    m.cols_ = cols;
    for (const auto& r : rows) {
      if (r.size() != cols) throw std::invalid_argument("F2Matrix: row length mismatch");
    }
    m.rows_ = std::move(rows);
    return m;
  }
  static F2Matrix from_columns(std::size_t rows, const std::vector<BitVec>& cols) {
    F2Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw std::invalid_argument("F2Matrix: column length mismatch");
      for (std::size_t r = cols[c].first_set(); r < rows; r = cols[c].next_set(r + 1)) m.set(r, c);
    }
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }

  BitVec column(std::size_t c) const {
    BitVec v(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      if (rows_[r].get(c)) v.set(r);
    }
    return v;
  }

  bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVec& r) { return r.none(); });
  }

  F2Matrix transpose() const {
    F2Matrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t c = rows_[r].first_set(); c < cols_; c = rows_[r].next_set(c + 1)) t.set(c, r);
    }
    return t;
  }

  BitVec operator*(const BitVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("F2Matrix: vector length mismatch");
    BitVec out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      if (rows_[r].dot(v)) out.set(r);
    }
    return out;
  }

  friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
    if (a.cols_ != b.rows()) throw std::invalid_argument("F2Matrix: product dimension mismatch");
    F2Matrix out(a.rows(), b.cols_);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      const BitVec& ar = a.rows_[r];
      for (std::size_t k = ar.first_set(); k < a.cols_; k = ar.next_set(k + 1)) out.rows_[r] ^= b.rows_[k];
    }
    return out;
  }
  F2Matrix& operator+=(const F2Matrix& o) {
    if (o.rows() != rows() || o.cols_ != cols_) throw std::invalid_argument("F2Matrix: sum dimension mismatch");
    for (std::size_t r = 0; r < rows(); ++r) rows_[r] ^= o.rows_[r];
    return *this;
  }
  friend F2Matrix operator+(F2Matrix a, const F2Matrix& b) { return a += b; }

  // Row-major flattening, used to treat a space of matrices as a vector space.
  BitVec flatten() const {
    BitVec v(rows() * cols_);
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t c = rows_[r].first_set(); c < cols_; c = rows_[r].next_set(c + 1)) v.set(r * cols_ + c);
    }
    return v;
  }
  static F2Matrix unflatten(const BitVec& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("F2Matrix: unflatten size mismatch");
    F2Matrix m(rows, cols);
    for (std::size_t i = v.first_set(); i < v.size(); i = v.next_set(i + 1)) m.set(i / cols, i % cols);
    return m;
  }

  F2Matrix submatrix(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
    F2Matrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) out.rows_[r] = rows_[r0 + r].slice(c0, nc);
    return out;
  }
  void paste(std::size_t r0, std::size_t c0, const F2Matrix& block) {
    for (std::size_t r = 0; r < block.rows(); ++r) rows_[r0 + r].assign(c0, block.rows_[r]);
  }

  friend bool operator==(const F2Matrix& a, const F2Matrix& b) { return a.cols_ == b.cols_ && a.rows_ == b.rows_; }

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

// Incremental row-echelon basis of a subspace, keyed by pivot position.
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim), pivot_row_(dim, npos) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  BitVec reduce(BitVec v) const {
    for (std::size_t i = v.first_set(); i < dim_; i = v.next_set(i + 1)) {
      if (pivot_row_[i] != npos) v ^= rows_[pivot_row_[i]];
    }
    return v;
  }
  bool contains(const BitVec& v) const { return reduce(v).none(); }

  // Adds v to the span; returns false when it was already contained.
  bool insert(const BitVec& v) {
    if (v.size() != dim_) throw std::invalid_argument("Echelon: length mismatch");
    BitVec r = reduce(v);
    const std::size_t p = r.first_set();
    if (p >= dim_) return false;
    pivot_row_[p] = rows_.size();
    rows_.push_back(std::move(r));
    return true;
  }

  const std::vector<BitVec>& basis() const { return rows_; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t dim_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivot_row_;
};

namespace f2 {

namespace detail {

struct Rref {
  F2Matrix m;
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan elimination on the first `ncols` columns.
inline Rref rref(F2Matrix m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    std::swap(m.row(p), m.row(r));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && m.get(i, c)) m.row(i) ^= m.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace detail

inline std::size_t rank(const F2Matrix& m) {
  Echelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rank();
}

// Some x with m * x = b, or nullopt when the system is inconsistent.
inline std::optional<BitVec> solve(const F2Matrix& m, const BitVec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  const std::size_t n = m.cols();
  F2Matrix aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    aug.row(r).assign(0, m.row(r));
    aug.set(r, n, b.get(r));
  }
  auto red = detail::rref(std::move(aug), n);
  for (std::size_t r = red.pivot_cols.size(); r < red.m.rows(); ++r) {
    if (red.m.get(r, n)) return std::nullopt;
  }
  BitVec x(n);
  for (std::size_t i = 0; i < red.pivot_cols.size(); ++i) x.set(red.pivot_cols[i], red.m.get(i, n));
  return x;
}

inline std::vector<BitVec> kernel_basis(const F2Matrix& m) {
  const std::size_t n = m.cols();
  auto red = detail::rref(m, n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  std::vector<BitVec> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(n);
    v.set(f);
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i) {
      if (red.m.get(i, f)) v.set(red.pivot_cols[i]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline bool in_span(const BitVec& v, const std::vector<BitVec>& basis) {
  Echelon e(v.size());
  for (const auto& b : basis) {
    if (b.size() != v.size()) throw std::invalid_argument("in_span: length mismatch");
    e.insert(b);
  }
  return e.contains(v);
}

inline std::optional<F2Matrix> inverse(const F2Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  F2Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    aug.row(r).assign(0, m.row(r));
    aug.set(r, n + r);
  }
  auto red = detail::rref(std::move(aug), n);
  if (red.pivot_cols.size() != n) return std::nullopt;
  return red.m.submatrix(0, n, n, n);
}

// L with L * m = identity, for m of full column rank.
inline std::optional<F2Matrix> left_inverse(const F2Matrix& m) {
  const F2Matrix mt = m.transpose();
  std::vector<BitVec> rows;
  rows.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto y = solve(mt, BitVec::unit(m.cols(), j));
    if (!y) return std::nullopt;
    rows.push_back(std::move(*y));
  }
  return F2Matrix::from_rows(m.rows(), std::move(rows));
}

}  // namespace f2
}  // namespace cotor
