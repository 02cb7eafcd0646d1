#pragma once

#include <random>
#include <utility>
#include <vector>

#include "cotor/cotor.hpp"

namespace testing_util {

inline const std::vector<std::pair<int, int>>& nakayama_instances() {
  static const std::vector<std::pair<int, int>> v{{1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}};
  return v;
}

inline cotor::BitVec random_bits(std::mt19937_64& rng, std::size_t n) {
  cotor::BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() & 1u) v.set(i);
  }
  return v;
}

template <class B>
cotor::Mor random_mor(const B& cat, std::mt19937_64& rng, const cotor::Obj& x, const cotor::Obj& y) {
  return {x, y, random_bits(rng, cotor::hom_dim(cat, x, y))};
}

template <class B>
cotor::Obj random_obj(const B& cat, std::mt19937_64& rng, std::size_t max_summands) {
  std::vector<int> s(1 + rng() % max_summands);
  for (int& i : s) i = static_cast<int>(rng() % cat.size());
  return cotor::Obj(s);
}

// Hom(W,-) applied to X -f-> Y -g-> Z is exact at Y.
template <class B>
bool hom_exact_at_middle(const B& cat, const cotor::Obj& w, const cotor::Mor& f, const cotor::Mor& g) {
  using namespace cotor;
  const std::size_t dx = hom_dim(cat, w, f.src), dy = hom_dim(cat, w, f.dst), dz = hom_dim(cat, w, g.dst);
  const F2Matrix fs = linear_map_matrix(dx, dy, [&](std::size_t j) { return compose(cat, basis_mor(cat, w, f.src, j), f).coords; });
  const F2Matrix gs = linear_map_matrix(dy, dz, [&](std::size_t j) { return compose(cat, basis_mor(cat, w, f.dst, j), g).coords; });
  if (!(gs * fs).is_zero()) return false;
  return f2::rank(fs) == dy - f2::rank(gs);
}

}  // namespace testing_util
