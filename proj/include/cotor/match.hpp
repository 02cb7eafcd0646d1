#pragma once

// Exact search for a bijection of indecomposables preserving Ext¹-incidence
// and conjugating the shift permutations.

#include <functional>
#include <optional>
#include <vector>

#include "cotor/category.hpp"

namespace cotor {

template <IndecCategory A, IndecCategory B>
std::optional<std::vector<int>> match_backends(const A& a, const B& b) {
  const int n = a.size();
  if (n != b.size()) return std::nullopt;
  if (n > 24) throw InputError("match_backends: size limit is 24");
  std::vector<int> phi(n, -1), inv(n, -1);

  auto consistent = [&](int x) {
    const int y = phi[x];
    if (ext_nonzero(a, x, x) != ext_nonzero(b, y, y)) return false;
    for (int w = 0; w < n; ++w) {
      if (w == x || phi[w] < 0) continue;
      if (ext_nonzero(a, x, w) != ext_nonzero(b, y, phi[w])) return false;
      if (ext_nonzero(a, w, x) != ext_nonzero(b, phi[w], y)) return false;
    }
    return true;
  };

  // Assign x ↦ y and propagate along the shift orbit.
  auto assign = [&](int x, int y, std::vector<int>& trail) {
    int cx = x, cy = y;
    while (true) {
      if (phi[cx] >= 0) return phi[cx] == cy;
      if (inv[cy] >= 0) return false;
      phi[cx] = cy;
      inv[cy] = cx;
      trail.push_back(cx);
      if (!consistent(cx)) return false;
      cx = a.shift_indec(cx, 1);
      cy = b.shift_indec(cy, 1);
    }
  };

  std::function<bool(int)> go = [&](int x) {
    while (x < n && phi[x] >= 0) ++x;
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (inv[y] >= 0) continue;
      std::vector<int> trail;
      if (assign(x, y, trail) && go(x + 1)) return true;
      for (int t : trail) {
        inv[phi[t]] = -1;
        phi[t] = -1;
      }
    }
    return false;
  };

  if (!go(0)) return std::nullopt;
  return phi;
}

}  // namespace cotor
