// Exhaustive, deterministic generation of the transformation families living
// inside the order-decreasing monoid D_n. The generator backtracks over the
// n! decreasing maps (point i has the i choices 1..i) and prunes branches
// that can no longer satisfy the requested family, so the oriented families
// stay fast well past n = 10. Output order is lexicographic on image tuples.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ordsemi/closure.hpp"
#include "ordsemi/transform.hpp"

namespace ordsemi {

enum class Family {
  decreasing,             // D_n
  order_preserving,       // C_n: order-preserving and decreasing
  orientation_preserving, // OPD_n
  oriented,               // ORD_n
  reversing,              // RD*_n: oriented, decreasing, not orientation-preserving
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::decreasing: return "decreasing";
    case Family::order_preserving: return "order-preserving";
    case Family::orientation_preserving: return "orientation-preserving";
    case Family::oriented: return "oriented";
    case Family::reversing: return "reversing";
  }
  return "?";
}

/// Selects one family on one chain, optionally restricted by rank, by the
/// family's degree function, and to idempotents or nilpotents.
///
/// rank_max bounds |image| from above; rank_exact pins it. degree means the
/// order-reversing degree on the reversing family and the order-preserving
/// degree on the orientation-preserving one.
struct FamilySelector {
  int n = 0;
  Family family = Family::decreasing;
  std::optional<int> rank_max;
  std::optional<int> rank_exact;
  std::optional<int> degree;
  bool idempotents_only = false;
  bool nilpotents_only = false;
};

/// ceil((n+1)/2): the image-size cap for reversing maps.
inline int reversing_rank_cap(int n) { return (n + 2) / 2; }

inline void validate(const FamilySelector& sel) {
  if (sel.n < 1) throw std::invalid_argument("selector: n must be >= 1");
  if (sel.rank_max && sel.rank_exact) {
    throw std::invalid_argument("selector: rank_max and rank_exact are exclusive");
  }
  for (auto r : {sel.rank_max, sel.rank_exact}) {
    if (r && (*r < 1 || *r > sel.n)) {
      throw std::invalid_argument("selector: rank out of [1, n]");
    }
  }
  if (sel.rank_exact && sel.family == Family::reversing) {
    const int r = *sel.rank_exact;
    if (r < 3 || r > reversing_rank_cap(sel.n)) {
      throw std::invalid_argument(
          "selector: reversing maps of exact rank r require 3 <= r <= ceil((n+1)/2)");
    }
  }
  if (sel.degree) {
    const int m = *sel.degree;
    if (sel.family == Family::reversing) {
      if (sel.rank_exact) {
        const int r = *sel.rank_exact;
        if (m < r || m > sel.n - r + 2) {
          throw std::invalid_argument(
              "selector: reversing degree requires r <= m <= n - r + 2");
        }
      } else if (m < 3 || m > sel.n - 1) {
        throw std::invalid_argument("selector: reversing degree requires 3 <= m <= n - 1");
      }
    } else if (sel.family == Family::orientation_preserving) {
      if (m < 1 || m > sel.n) {
        throw std::invalid_argument("selector: order-preserving degree out of [1, n]");
      }
      if (sel.idempotents_only && sel.rank_exact && *sel.rank_exact <= sel.n - 1
          && m < *sel.rank_exact + 1) {
        throw std::invalid_argument(
            "selector: rank-r idempotents need degree m >= r + 1");
      }
    } else {
      throw std::invalid_argument("selector: degree applies to the reversing "
                                  "and orientation-preserving families only");
    }
  }
}

namespace detail {

struct SearchState {
  const FamilySelector& sel;
  std::vector<std::uint8_t> img;
  std::vector<int> value_count;  // occurrences of each value in the prefix
  int distinct = 0;
  int ascents = 0;   // linear ascents among fixed adjacent pairs
  int descents = 0;  // linear descents among fixed adjacent pairs
  int fixed_points_past_one = 0;
  std::function<void(const std::vector<std::uint8_t>&)> yield;
};

inline bool rank_cap_exceeded(const SearchState& st) {
  if (st.sel.rank_max && st.distinct > *st.sel.rank_max) return true;
  if (st.sel.rank_exact && st.distinct > *st.sel.rank_exact) return true;
  return false;
}

// Branch pruning after img[0..i-1] has been fixed: returns false when no
// completion can satisfy the selector.
inline bool prefix_viable(const SearchState& st, int i) {
  const auto& sel = st.sel;
  if (rank_cap_exceeded(st)) return false;
  switch (sel.family) {
    case Family::decreasing:
      break;
    case Family::order_preserving:
      if (st.descents > 0) return false;
      break;
    case Family::orientation_preserving:
      if (st.descents > 1) return false;
      break;
    case Family::oriented:
      if (st.descents > 1 && st.ascents > 1) return false;
      break;
    case Family::reversing:
      if (st.ascents > 1) return false;
      break;
  }
  if (sel.nilpotents_only && i >= 2 && st.img[i - 1] == i) return false;
  if (sel.idempotents_only) {
    const int v = st.img[i - 1];
    if (v < i && st.img[v - 1] != v) return false;
  }
  if (sel.degree) {
    const int m = *sel.degree;
    if (sel.family == Family::reversing) {
      if (i < m && st.img[i - 1] != 1) return false;
      if (i == m && st.img[i - 1] == 1) return false;
    } else {
      // order-preserving degree == m: weakly increasing through m, then a drop
      if (i <= m && i >= 2 && st.img[i - 1] < st.img[i - 2]) return false;
      if (i == m + 1 && st.img[i - 1] >= st.img[i - 2]) return false;
    }
  }
  return true;
}

inline bool leaf_accepts(const SearchState& st) {
  const auto& sel = st.sel;
  const int n = sel.n;
  const int wrap_desc = st.img[0] < st.img[n - 1] ? 1 : 0;
  const int wrap_asc = st.img[0] > st.img[n - 1] ? 1 : 0;
  const int desc_total = st.descents + wrap_desc;
  const int asc_total = st.ascents + wrap_asc;
  switch (sel.family) {
    case Family::decreasing:
      break;
    case Family::order_preserving:
      if (st.descents > 0) return false;
      break;
    case Family::orientation_preserving:
      if (desc_total > 1) return false;
      break;
    case Family::oriented:
      if (desc_total > 1 && asc_total > 1) return false;
      break;
    case Family::reversing:
      if (asc_total > 1 || desc_total <= 1) return false;
      break;
  }
  if (sel.rank_exact && st.distinct != *sel.rank_exact) return false;
  if (sel.nilpotents_only && (st.img[0] != 1 || st.fixed_points_past_one > 0)) return false;
  if (sel.idempotents_only) {
    for (int x = 0; x < n; ++x) {
      if (st.img[st.img[x] - 1] != st.img[x]) return false;
    }
  }
  return true;
}

inline void search(SearchState& st, int i) {
  const int n = st.sel.n;
  for (int v = 1; v <= i; ++v) {
    st.img[i - 1] = static_cast<std::uint8_t>(v);
    const bool new_value = st.value_count[v]++ == 0;
    if (new_value) ++st.distinct;
    const bool fixes = (v == i && i >= 2);
    if (fixes) ++st.fixed_points_past_one;
    int step_asc = 0, step_desc = 0;
    if (i >= 2) {
      if (v > st.img[i - 2]) step_asc = 1;
      if (v < st.img[i - 2]) step_desc = 1;
    }
    st.ascents += step_asc;
    st.descents += step_desc;

    if (prefix_viable(st, i)) {
      if (i == n) {
        if (leaf_accepts(st)) st.yield(st.img);
      } else {
        search(st, i + 1);
      }
    }

    st.ascents -= step_asc;
    st.descents -= step_desc;
    if (fixes) --st.fixed_points_past_one;
    if (new_value) --st.distinct;
    --st.value_count[v];
  }
}

}  // namespace detail

/// Streams the family in lexicographic order of image tuples.
inline void visit(const FamilySelector& sel,
                  const std::function<void(const std::vector<std::uint8_t>&)>& fn) {
  validate(sel);
  detail::SearchState st{sel, {}, {}, 0, 0, 0, 0, fn};
  st.img.resize(static_cast<std::size_t>(sel.n));
  st.value_count.resize(static_cast<std::size_t>(sel.n) + 1, 0);
  detail::search(st, 1);
}

/// Materialises the family as a canonical SemigroupSet.
inline SemigroupSet enumerate_family(const FamilySelector& sel) {
  std::vector<Transformation> out;
  visit(sel, [&](const std::vector<std::uint8_t>& img) { out.emplace_back(img); });
  return SemigroupSet::from_sorted(sel.n, std::move(out));
}

/// |family| without materialising the elements.
inline std::uint64_t count_by_enumeration(const FamilySelector& sel) {
  std::uint64_t count = 0;
  visit(sel, [&](const std::vector<std::uint8_t>&) { ++count; });
  return count;
}

/// Prepends a new least point fixed at 1: the result maps 1 to 1 and i to
/// (i-1)a for i >= 2. Restricted to reversing maps this is the standard
/// rank-preserving bijection onto the nilpotent reversing maps one chain up.
inline Transformation nilpotent_shift(const Transformation& a) {
  std::vector<Transformation::value_type> img;
  img.reserve(static_cast<std::size_t>(a.n()) + 1);
  img.push_back(1);
  for (int x = 1; x <= a.n(); ++x) {
    img.push_back(static_cast<Transformation::value_type>(a(x)));
  }
  return Transformation(std::move(img));
}

// Selector shorthands for the families with extra parameter constraints.

/// All reversing maps of exact rank r (requires 3 <= r <= ceil((n+1)/2)).
inline FamilySelector reversing_rank_selector(int n, int r) {
  FamilySelector sel;
  sel.n = n;
  sel.family = Family::reversing;
  sel.rank_exact = r;
  validate(sel);
  return sel;
}

/// The slice of reversing rank-r maps with order-reversing degree m.
inline FamilySelector reversing_slice_selector(int n, int r, int m) {
  FamilySelector sel = reversing_rank_selector(n, r);
  sel.degree = m;
  validate(sel);
  return sel;
}

/// Rank-r idempotents of OPD_n with order-preserving degree m.
inline FamilySelector degree_idempotent_selector(int n, int r, int m) {
  if (r < 1 || r > n - 1) throw std::invalid_argument("rank out of [1, n-1]");
  if (m < r + 1 || m > n) throw std::invalid_argument("degree out of [r+1, n]");
  FamilySelector sel;
  sel.n = n;
  sel.family = Family::orientation_preserving;
  sel.rank_exact = r;
  sel.degree = m;
  sel.idempotents_only = true;
  validate(sel);
  return sel;
}

}  // namespace ordsemi
