// Finite-semigroup engine: canonical element sets, product closure,
// generating-set and undecomposability tests, maximality tests, and an
// exhaustive maximal-subsemigroup scan for tiny instances.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <unordered_map>
#include <vector>

#include "ordsemi/transform.hpp"

namespace ordsemi {

/// A finite, canonically ordered, duplicate-free set of transformations on a
/// common chain. Canonical order is lexicographic on image tuples, so equal
/// sets compare equal element-by-element and listings are reproducible.
class SemigroupSet {
 public:
  explicit SemigroupSet(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("chain size must be >= 1");
  }

  SemigroupSet(int n, std::vector<Transformation> elements) : n_(n) {
    if (n < 1) throw std::invalid_argument("chain size must be >= 1");
    for (const auto& t : elements) {
      if (t.n() != n) throw std::domain_error("element chain size mismatch");
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    elems_ = std::move(elements);
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  const std::vector<Transformation>& elements() const& noexcept { return elems_; }
  std::vector<Transformation> elements() && { return std::move(elems_); }
  const Transformation& operator[](std::size_t i) const { return elems_.at(i); }

  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  bool contains(const Transformation& t) const {
    return std::binary_search(elems_.begin(), elems_.end(), t);
  }

  bool subset_of(const SemigroupSet& other) const {
    if (n_ != other.n_) return false;
    return std::includes(other.elems_.begin(), other.elems_.end(),
                         elems_.begin(), elems_.end());
  }

  SemigroupSet unioned(const SemigroupSet& other) const {
    require_same_chain(other);
    std::vector<Transformation> out;
    out.reserve(size() + other.size());
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                   other.elems_.end(), std::back_inserter(out));
    return from_sorted(n_, std::move(out));
  }

  SemigroupSet minus(const SemigroupSet& other) const {
    require_same_chain(other);
    std::vector<Transformation> out;
    std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(),
                        other.elems_.end(), std::back_inserter(out));
    return from_sorted(n_, std::move(out));
  }

  SemigroupSet with(const Transformation& t) const {
    return unioned(SemigroupSet(n_, {t}));
  }

  SemigroupSet without(const Transformation& t) const {
    return minus(SemigroupSet(n_, {t}));
  }

  friend bool operator==(const SemigroupSet&, const SemigroupSet&) = default;

  /// Constructs from an already sorted, duplicate-free vector.
  static SemigroupSet from_sorted(int n, std::vector<Transformation> elements) {
    SemigroupSet out(n);
    out.elems_ = std::move(elements);
    return out;
  }

 private:
  void require_same_chain(const SemigroupSet& other) const {
    if (n_ != other.n_) throw std::domain_error("chain size mismatch");
  }

  int n_;
  std::vector<Transformation> elems_;
};

namespace detail {

struct ByteVecHash {
  std::size_t operator()(const std::vector<std::uint8_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    for (std::uint8_t b : v) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

/// Least product-closed superset of gens: the subsemigroup they generate.
inline SemigroupSet close(const SemigroupSet& gens) {
  if (gens.empty()) throw std::domain_error("close: empty generating set");
  std::vector<Transformation> elems(gens.begin(), gens.end());
  std::unordered_map<std::vector<std::uint8_t>, std::uint32_t, detail::ByteVecHash> index;
  index.reserve(elems.size() * 4);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index.emplace(elems[i].images(), static_cast<std::uint32_t>(i));
  }
  std::vector<std::uint8_t> scratch;
  auto try_product = [&](const Transformation& a, const Transformation& b) {
    detail::compose_into(a, b, scratch);
    if (index.find(scratch) == index.end()) {
      index.emplace(scratch, static_cast<std::uint32_t>(elems.size()));
      elems.push_back(Transformation(scratch));
    }
  };
  // Every ordered pair (x, y) is multiplied once i reaches max(index of x, y).
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      try_product(elems[i], elems[j]);
      if (j != i) try_product(elems[j], elems[i]);
    }
  }
  std::sort(elems.begin(), elems.end());
  return SemigroupSet::from_sorted(gens.n(), std::move(elems));
}

/// close(gens) == target, with gens required to lie inside target.
inline bool is_generating(const SemigroupSet& gens, const SemigroupSet& target) {
  if (!gens.subset_of(target)) {
    throw std::domain_error("is_generating: generators not contained in target");
  }
  return close(gens) == target;
}

inline bool is_subsemigroup(const SemigroupSet& s) {
  std::vector<std::uint8_t> scratch;
  for (const auto& a : s) {
    for (const auto& b : s) {
      detail::compose_into(a, b, scratch);
      if (!s.contains(Transformation(scratch))) return false;
    }
  }
  return true;
}

namespace detail {

// ker(u) refines ker(a): u never identifies two points a separates... the
// condition needed is the reverse containment ker(u) subseteq ker(a), i.e.
// ua = ub implies aa = ab, which is necessary for a = u v.
inline bool kernel_refines(const Transformation& u, const Transformation& a) {
  const int n = u.n();
  // value -> image under a of the first point of that u-class
  std::vector<int> rep(static_cast<std::size_t>(n) + 1, 0);
  for (int x = 1; x <= n; ++x) {
    int v = u(x);
    if (rep[static_cast<std::size_t>(v)] == 0) {
      rep[static_cast<std::size_t>(v)] = a(x);
    } else if (rep[static_cast<std::size_t>(v)] != a(x)) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// No u, v in s, both different from a, multiply to a. The pruned search
/// restricts u to candidates with rank(u) >= rank(a) and ker(u) inside
/// ker(a); set prune = false for the plain quadratic scan.
inline bool is_undecomposable(const Transformation& a, const SemigroupSet& s,
                              bool prune = true) {
  if (!s.contains(a)) throw std::domain_error("is_undecomposable: element not in set");
  const int target_rank = rank(a);
  std::vector<std::uint8_t> scratch;
  for (const auto& u : s) {
    if (u == a) continue;
    if (prune) {
      if (rank(u) < target_rank) continue;
      if (!detail::kernel_refines(u, a)) continue;
    }
    for (const auto& v : s) {
      if (v == a) continue;
      detail::compose_into(u, v, scratch);
      if (scratch == a.images()) return false;
    }
  }
  return true;
}

/// s is maximal in whole: proper, closed, and adjoining any outside element
/// regenerates the whole semigroup.
inline bool is_maximal_in(const SemigroupSet& s, const SemigroupSet& whole) {
  if (!s.subset_of(whole)) throw std::domain_error("is_maximal_in: not a subset");
  if (s.empty() || s == whole) return false;
  if (!is_subsemigroup(s)) return false;
  for (const auto& x : whole.minus(s)) {
    if (close(s.with(x)) != whole) return false;
  }
  return true;
}

/// All maximal proper subsemigroups of whole, found by scanning every subset
/// of whole (so |whole| is capped at 22). whole itself must be closed.
inline std::vector<SemigroupSet> exhaustive_maximal_search(const SemigroupSet& whole) {
  const std::size_t k = whole.size();
  if (k > 22) {
    throw resource_error("exhaustive_maximal_search: set larger than the 2^22 scan budget");
  }
  if (!is_subsemigroup(whole)) {
    throw std::domain_error("exhaustive_maximal_search: input is not closed");
  }
  // product index table; products stay inside whole since it is closed
  std::vector<std::uint16_t> table(k * k);
  {
    std::vector<std::uint8_t> scratch;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        detail::compose_into(whole[i], whole[j], scratch);
        Transformation p{scratch};
        auto it = std::lower_bound(whole.begin(), whole.end(), p);
        table[i * k + j] = static_cast<std::uint16_t>(it - whole.begin());
      }
    }
  }
  const std::uint32_t full = (1u << k) - 1;
  std::vector<std::uint32_t> closed;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    bool ok = true;
    for (std::uint32_t mi = mask; ok && mi; mi &= mi - 1) {
      const std::size_t i = static_cast<std::size_t>(std::countr_zero(mi));
      for (std::uint32_t mj = mask; mj; mj &= mj - 1) {
        const std::size_t j = static_cast<std::size_t>(std::countr_zero(mj));
        if (!((mask >> table[i * k + j]) & 1u) || !((mask >> table[j * k + i]) & 1u)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) closed.push_back(mask);
  }
  // maximal closed masks: scan by decreasing popcount against accepted ones
  std::sort(closed.begin(), closed.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t mask : closed) {
    bool dominated = false;
    for (std::uint32_t m : maximal) {
      if ((mask & m) == mask) { dominated = true; break; }
    }
    if (!dominated) maximal.push_back(mask);
  }
  std::vector<SemigroupSet> out;
  out.reserve(maximal.size());
  for (std::uint32_t mask : maximal) {
    std::vector<Transformation> elems;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) elems.push_back(whole[i]);
    }
    out.push_back(SemigroupSet::from_sorted(whole.n(), std::move(elems)));
  }
  std::sort(out.begin(), out.end(), [](const SemigroupSet& a, const SemigroupSet& b) {
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace ordsemi
