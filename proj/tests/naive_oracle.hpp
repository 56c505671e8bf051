// Test-only reference implementations, kept deliberately independent of the
// library's code paths: full n^n scans instead of pruned backtracking, pair
// scans instead of adjacent-difference counting, and rotation sorting
// instead of cyclic descent counting.

#pragma once

#include <functional>
#include <vector>

#include "ordsemi/transform.hpp"

namespace naive {

using ordsemi::Transformation;

/// Calls fn for every one of the n^n full transformations.
inline void all_maps(int n, const std::function<void(const Transformation&)>& fn) {
  std::vector<Transformation::value_type> img(static_cast<std::size_t>(n), 1);
  while (true) {
    fn(Transformation{img});
    int i = n - 1;
    while (i >= 0 && img[static_cast<std::size_t>(i)] == n) {
      img[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++img[static_cast<std::size_t>(i)];
  }
}

inline bool order_preserving_pairs(const Transformation& a) {
  for (int x = 1; x <= a.n(); ++x) {
    for (int y = x + 1; y <= a.n(); ++y) {
      if (a(x) > a(y)) return false;
    }
  }
  return true;
}

inline bool order_reversing_pairs(const Transformation& a) {
  for (int x = 1; x <= a.n(); ++x) {
    for (int y = x + 1; y <= a.n(); ++y) {
      if (a(x) < a(y)) return false;
    }
  }
  return true;
}

inline bool decreasing_pointwise(const Transformation& a) {
  for (int x = 1; x <= a.n(); ++x) {
    if (a(x) > x) return false;
  }
  return true;
}

/// A sequence is cyclic iff some rotation of it is weakly increasing.
inline bool cyclic_by_rotation(const Transformation& a) {
  const int n = a.n();
  for (int start = 0; start < n; ++start) {
    bool sorted = true;
    for (int i = 0; i + 1 < n && sorted; ++i) {
      if (a((start + i) % n + 1) > a((start + i + 1) % n + 1)) sorted = false;
    }
    if (sorted) return true;
  }
  return false;
}

inline bool anticyclic_by_rotation(const Transformation& a) {
  const int n = a.n();
  for (int start = 0; start < n; ++start) {
    bool sorted = true;
    for (int i = 0; i + 1 < n && sorted; ++i) {
      if (a((start + i) % n + 1) < a((start + i + 1) % n + 1)) sorted = false;
    }
    if (sorted) return true;
  }
  return false;
}

}  // namespace naive
