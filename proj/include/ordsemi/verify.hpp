// The verification harness: one named, runnable check per counting result,
// generating-set result, and maximality result, each comparing the closed
// form or construction against independent brute force (enumeration,
// product closure, exhaustive pair and subset scans) at desk scale.

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ordsemi/closure.hpp"
#include "ordsemi/counting.hpp"
#include "ordsemi/enumerate.hpp"
#include "ordsemi/generators.hpp"
#include "ordsemi/maximal.hpp"
#include "ordsemi/transform.hpp"

namespace ordsemi {

/// Per-technique chain-size caps. Checks refuse (resource_error) to run past
/// their cap; raise_to lifts every cap for explicitly requested big runs.
struct Budgets {
  int enumeration = 10;   // brute-force family generation
  int closure = 8;        // product closure of full generating sets
  int maximality = 6;     // closure battery per maximal-subsemigroup candidate
  int pair_search = 7;    // exhaustive u*v scans (undecomposability, class products)
  int minimality = 7;     // drop-one-generator closure battery

  void raise_to(int n) {
    enumeration = std::max(enumeration, n);
    closure = std::max(closure, n);
    maximality = std::max(maximality, n);
    pair_search = std::max(pair_search, n);
    minimality = std::max(minimality, n);
  }
};

struct Mismatch {
  std::string what;
  std::string expected;
  std::string actual;
};

/// Outcome of one (check, n, r) cell.
struct VerificationRun {
  VerificationRun(std::string id, int chain, std::optional<int> rank_bound = {})
      : check_id(std::move(id)), n(chain), r(rank_bound) {}

  std::string check_id;
  int n = 0;
  std::optional<int> r;
  bool pass = true;
  std::vector<Mismatch> details;
  std::int64_t elapsed_ms = 0;
};

namespace detail {

template <typename T, typename U>
inline void expect_eq(VerificationRun& run, const std::string& what, const T& expected,
                      const U& actual) {
  std::ostringstream e, a;
  e << expected;
  a << actual;
  if (e.str() != a.str()) {
    run.pass = false;
    run.details.push_back({what, e.str(), a.str()});
  }
}

inline void expect(VerificationRun& run, const std::string& what, bool ok) {
  if (!ok) {
    run.pass = false;
    run.details.push_back({what, "true", "false"});
  }
}

inline SemigroupSet enum_oriented(int n, std::optional<int> rank_max = {}) {
  FamilySelector sel;
  sel.n = n;
  sel.family = Family::oriented;
  sel.rank_max = rank_max;
  return enumerate_family(sel);
}

inline SemigroupSet enum_op(int n, std::optional<int> rank_max = {}) {
  FamilySelector sel;
  sel.n = n;
  sel.family = Family::orientation_preserving;
  sel.rank_max = rank_max;
  return enumerate_family(sel);
}

inline std::uint64_t count_family(int n, Family f, std::optional<int> rank_max = {},
                                  std::optional<int> rank_exact = {},
                                  std::optional<int> degree = {},
                                  bool nilpotent = false) {
  FamilySelector sel;
  sel.n = n;
  sel.family = f;
  sel.rank_max = rank_max;
  sel.rank_exact = rank_exact;
  sel.degree = degree;
  sel.nilpotents_only = nilpotent;
  return count_by_enumeration(sel);
}

inline void require_budget(int n, int cap, const char* which) {
  if (n > cap) {
    throw resource_error(std::string("chain size ") + std::to_string(n)
                         + " exceeds the " + which + " budget of " + std::to_string(cap)
                         + " (raise with --budget)");
  }
}

}  // namespace detail

// --- individual checks -----------------------------------------------------

/// |J_{n,r}| = C(n+1, 2r-1), the per-degree slices, and the nilpotent slice
/// identity, against enumeration.
inline VerificationRun check_prop1(int n, int r, const Budgets& budgets) {
  detail::require_budget(n, budgets.enumeration, "enumeration");
  VerificationRun run{"prop1", n, r};
  const BigInt closed = count_reversing_rank(n, r);
  detail::expect_eq(run, "rank-slice count vs enumeration", closed,
                    detail::count_family(n, Family::reversing, {}, r));
  BigInt slice_sum = 0;
  for (int m = r; m <= n - r + 2; ++m) {
    const BigInt slice = count_reversing_rank_by_degree(n, r, m);
    slice_sum += slice;
    detail::expect_eq(run, "degree-" + std::to_string(m) + " slice vs enumeration", slice,
                      detail::count_family(n, Family::reversing, {}, r, m));
  }
  detail::expect_eq(run, "degree slices sum to the rank-slice count", closed, slice_sum);
  if (n >= 5) {
    const BigInt previous =
        (r <= reversing_cap(n - 1)) ? count_reversing_rank(n - 1, r) : BigInt(0);
    detail::expect_eq(run, "nilpotent count vs previous chain", previous,
                      detail::count_family(n, Family::reversing, {}, r, {}, true));
  }
  return run;
}

/// |RD*_n| = 2^n - (n^3+5n+6)/6, its degree slices, and its nilpotent count.
inline VerificationRun check_lemma2(int n, const Budgets& budgets) {
  detail::require_budget(n, budgets.enumeration, "enumeration");
  VerificationRun run{"lemma2", n, {}};
  const BigInt closed = count_reversing(n);
  detail::expect_eq(run, "reversing count vs enumeration", closed,
                    detail::count_family(n, Family::reversing));
  BigInt slice_sum = 0;
  for (int m = 3; m <= n - 1; ++m) {
    const BigInt slice = count_reversing_by_degree(n, m);
    slice_sum += slice;
    detail::expect_eq(run, "degree-" + std::to_string(m) + " slice vs enumeration", slice,
                      detail::count_family(n, Family::reversing, {}, {}, m));
  }
  detail::expect_eq(run, "degree slices sum to the total", closed, slice_sum);
  if (n >= 5) {
    detail::expect_eq(run, "nilpotent count vs previous chain", count_reversing(n - 1),
                      detail::count_family(n, Family::reversing, {}, {}, {}, true));
  }
  return run;
}

/// |ORD(n,r)| and |N(ORD(n,r))| closed forms against enumeration, plus the
/// two |ORD_n| expressions when r = n - 1.
inline VerificationRun check_cardinality(int n, int r, const Budgets& budgets) {
  detail::require_budget(n, budgets.enumeration, "enumeration");
  VerificationRun run{"cardinality", n, r};
  detail::expect_eq(run, "oriented count vs enumeration", count_oriented(n, r),
                    detail::count_family(n, Family::oriented, r));
  if (n >= 5) {
    detail::expect_eq(run, "nilpotent closed form equals previous-chain count",
                      count_oriented(n - 1, r), count_nilpotent_oriented(n, r));
    detail::expect_eq(run, "nilpotent count vs enumeration", count_nilpotent_oriented(n, r),
                      detail::count_family(n, Family::oriented, r, {}, {}, true));
  }
  if (r == n - 1) {
    detail::expect_eq(run, "full monoid count vs enumeration", count_oriented_all(n),
                      detail::count_family(n, Family::oriented));
    detail::expect_eq(run, "full monoid closed form vs rank formula sum",
                      count_oriented_all(n), count_oriented(n, n));
    detail::expect_eq(run, "full monoid equals rank n-1 count plus identity",
                      count_oriented_all(n), count_oriented(n, n - 1) + 1);
  }
  return run;
}

/// |OPD(n,r)| closed form against enumeration.
inline VerificationRun check_opd_card(int n, int r, const Budgets& budgets) {
  detail::require_budget(n, budgets.enumeration, "enumeration");
  VerificationRun run{"opd-card", n, r};
  detail::expect_eq(run, "orientation-preserving count vs enumeration",
                    count_orientation_preserving(n, r),
                    detail::count_family(n, Family::orientation_preserving, r));
  return run;
}

/// The specialised Rothe-Hagen identity, plus its agreement with the
/// rank-slice count.
inline VerificationRun check_rothe_hagen(int n, int r, const Budgets&) {
  VerificationRun run{"rothe-hagen", n, r};
  const auto [lhs, rhs] = rothe_hagen_specialized(n, r);
  detail::expect_eq(run, "identity lhs equals rhs", rhs, lhs);
  detail::expect_eq(run, "rhs equals the rank-slice count", count_reversing_rank(n, r), rhs);
  return run;
}

/// Every element of the OPD generating set is undecomposable in ORD(n,r).
inline VerificationRun check_prop4(int n, int r, const Budgets& budgets) {
  detail::require_budget(n, budgets.pair_search, "pair-search");
  VerificationRun run{"prop4", n, r};
  const SemigroupSet whole = detail::enum_oriented(n, r);
  for (const auto& c : op_generating_set(n, r)) {
    detail::expect(run, "undecomposable: " + format_transformation(c),
                   is_undecomposable(c, whole));
  }
  return run;
}

/// Every reversing map of ORD(n,r) factors over OPD(n,r) and one reversing
/// generator, with all factors in their declared classes.
inline VerificationRun check_lemma5(int n, int r, const Budgets& budgets) {
  detail::require_budget(n, budgets.enumeration, "enumeration");
  VerificationRun run{"lemma5", n, r};
  const int rhat = effective_rank(n, r).value;
  FamilySelector sel;
  sel.n = n;
  sel.family = Family::reversing;
  sel.rank_max = r;
  for (const auto& a : enumerate_family(sel)) {
    FactorizationWitness w = factorize(a, n, r);
    bool ok = w.product() == a;
    int lambda_factors = 0;
    for (std::size_t i = 0; ok && i < w.word.size(); ++i) {
      const auto& f = w.word[i];
      switch (w.classes[i]) {
        case FactorClass::orientation_preserving:
          ok = in_op_decreasing(f) && rank(f) <= r;
          break;
        case FactorClass::reversing_generator:
          ++lambda_factors;
          ok = f == reversing_generator(n, rhat, order_reversing_degree(a));
          break;
        case FactorClass::order_preserving:
          ok = in_catalan(f) && rank(f) <= r;
          break;
      }
    }
    ok = ok && lambda_factors == 1;
    if (!ok) {
      detail::expect(run, "witness for " + format_transformation(a), false);
    }
  }
  return run;
}

/// Each degree m in [3, n-1] needs its own reversing element in any
/// generating set: the canonical generator has fix {1, m}, and removing all
/// reversing maps with that fix leaves a proper closed subset.
inline VerificationRun check_prop6(int n, int r, const Budgets& budgets) {
  VerificationRun run{"prop6", n, r};
  const int rhat = effective_rank(n, r).value;
  for (int m = 3; m <= n - 1; ++m) {
    const Transformation g = reversing_generator(n, rhat, m);
    detail::expect(run, "generator of degree " + std::to_string(m) + " is reversing",
                   in_reversing(g));
    detail::expect_eq(run, "fix set of degree-" + std::to_string(m) + " generator",
                      "{1," + std::to_string(m) + "}", [&] {
                        auto f = fix_set(g);
                        std::string s = "{";
                        for (std::size_t i = 0; i < f.size(); ++i) {
                          if (i) s += ",";
                          s += std::to_string(f[i]);
                        }
                        return s + "}";
                      }());
  }
  if (n <= budgets.maximality) {
    const SemigroupSet whole = detail::enum_oriented(n, r);
    for (int m = 3; m <= n - 1; ++m) {
      std::vector<Transformation> keep;
      for (const auto& t : whole) {
        auto f = fix_set(t);
        if (in_reversing(t) && f.size() == 2 && f[0] == 1 && f[1] == m) continue;
        keep.push_back(t);
      }
      const SemigroupSet rest(n, std::move(keep));
      detail::expect(run,
                     "closure without fix {1," + std::to_string(m) + "} reversing maps stays proper",
                     close(rest) != whole);
    }
  }
  return run;
}

/// The canonical generating set generates ORD(n,r), has the rank-formula
/// size, and is minimal (dropping any one generator breaks generation).
inline VerificationRun check_thm7(int n, int r, const Budgets& budgets) {
  detail::require_budget(n, budgets.closure, "closure");
  VerificationRun run{"thm7", n, r};
  const SemigroupSet gens = minimal_generating_set(n, r);
  const SemigroupSet whole = detail::enum_oriented(n, r);
  detail::expect_eq(run, "generating set size vs rank formula", rank_oriented(n, r),
                    gens.size());
  detail::expect(run, "generators are inside the monoid", gens.subset_of(whole));
  detail::expect(run, "closure reaches the whole monoid", close(gens) == whole);
  if (n <= budgets.minimality) {
    for (const auto& g : gens) {
      detail::expect(run, "dropping " + format_transformation(g) + " breaks generation",
                     close(gens.without(g)) != whole);
    }
  }
  return run;
}

/// Reversing generators: undecomposable exactly in the high-degree regime;
/// in the low-degree regime the decomposition pair is a proper factorization.
inline VerificationRun check_prop8(int n, int r, const Budgets& budgets) {
  VerificationRun run{"prop8", n, r};
  const int rhat = effective_rank(n, r).value;
  for (int m = 3; m <= n - rhat + 1; ++m) {
    const Transformation g = reversing_generator(n, rhat, m);
    const auto [first, second] = decomposition_pair(n, rhat, m);
    detail::expect(run, "degree-" + std::to_string(m) + " pair multiplies to the generator",
                   compose(first, second) == g);
    detail::expect(run, "degree-" + std::to_string(m) + " pair factors are proper",
                   first != g && second != g);
    detail::expect(run, "degree-" + std::to_string(m) + " pair factors lie in the monoid",
                   in_oriented_decreasing(first) && in_oriented_decreasing(second)
                       && rank(first) <= r && rank(second) <= r);
  }
  if (n <= budgets.pair_search) {
    const SemigroupSet whole = detail::enum_oriented(n, r);
    for (int m = 3; m <= n - 1; ++m) {
      const Transformation g = reversing_generator(n, rhat, m);
      const bool expected_undecomposable = (m >= n - rhat + 2);
      detail::expect_eq(run, "undecomposability of degree-" + std::to_string(m) + " generator",
                        expected_undecomposable, is_undecomposable(g, whole));
    }
  }
  return run;
}

/// Every member of a decomposable-regime generator class arises as a single
/// idempotent times any other member.
inline VerificationRun check_lemma9(int n, int r, const Budgets& budgets) {
  detail::require_budget(n, budgets.enumeration, "enumeration");
  VerificationRun run{"lemma9", n, r};
  const int rhat = effective_rank(n, r).value;
  for (int m = 3; m <= n - rhat + 1; ++m) {
    const SemigroupSet cls = reversing_generator_class(n, r, m);
    const int p = std::max(0, m - rhat);
    std::vector<int> transversal{1};
    for (int x = m; x <= 2 * m - p - 2; ++x) transversal.push_back(x);
    for (const auto& target : cls) {
      const Transformation eps = idempotent_with(kernel(target), transversal);
      detail::expect(run, "idempotent factor lies in OPD(n,r)",
                     is_idempotent(eps) && in_op_decreasing(eps) && rank(eps) <= r);
      for (const auto& source : cls) {
        detail::expect(run,
                       "idempotent times " + format_transformation(source) + " gives "
                           + format_transformation(target),
                       compose(eps, source) == target);
      }
    }
    if (n <= budgets.maximality) {
      const SemigroupSet op = detail::enum_op(n, r);
      for (const auto& source : cls) {
        detail::expect(run, "class lies in the closure of OPD(n,r) with "
                                + format_transformation(source),
                       cls.subset_of(close(op.with(source))));
      }
    }
  }
  return run;
}

/// Removing a decomposable-regime class leaves a subsemigroup (no outside
/// product lands in the class) and that subsemigroup is maximal.
inline VerificationRun check_lemma10(int n, int r, const Budgets& budgets) {
  detail::require_budget(n, budgets.pair_search, "pair-search");
  VerificationRun run{"lemma10", n, r};
  const int rhat = effective_rank(n, r).value;
  const SemigroupSet whole = detail::enum_oriented(n, r);
  std::vector<std::uint8_t> scratch;
  for (int m = 3; m <= n - rhat + 1; ++m) {
    const SemigroupSet cls = reversing_generator_class(n, r, m);
    const SemigroupSet rest = whole.minus(cls);
    bool closed = true;
    for (const auto& a : rest) {
      for (const auto& b : rest) {
        detail::compose_into(a, b, scratch);
        if (cls.contains(Transformation(scratch))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    detail::expect(run, "no two outside elements multiply into the degree-"
                            + std::to_string(m) + " class", closed);
    if (n <= budgets.maximality) {
      detail::expect(run, "complement of the degree-" + std::to_string(m) + " class is maximal",
                     is_maximal_in(rest, whole));
    }
  }
  return run;
}

/// The descriptor list is sound (every realized set is maximal), has the
/// rank-formula size, realizes pairwise distinct sets, and at (4,3) agrees
/// with the exhaustive subset scan.
inline VerificationRun check_thm8(int n, int r, const Budgets& budgets) {
  detail::require_budget(n, budgets.maximality, "maximality");
  VerificationRun run{"thm8", n, r};
  const auto descriptors = maximal_descriptors(n, r);
  detail::expect_eq(run, "descriptor count vs rank formula", rank_oriented(n, r),
                    descriptors.size());
  const SemigroupSet whole = detail::enum_oriented(n, r);
  std::vector<SemigroupSet> realized;
  for (const auto& d : descriptors) {
    realized.push_back(realize(d));
    detail::expect(run, std::string("maximality of ") + kind_name(d.kind)
                            + (d.m ? " degree " + std::to_string(*d.m)
                                   : d.alpha ? " " + format_transformation(*d.alpha) : ""),
                   is_maximal_in(realized.back(), whole));
  }
  for (std::size_t i = 0; i < realized.size(); ++i) {
    for (std::size_t j = i + 1; j < realized.size(); ++j) {
      detail::expect(run, "realized sets are pairwise distinct", realized[i] != realized[j]);
    }
  }
  if (n == 4 && r == 3) {
    auto found = exhaustive_maximal_search(whole);
    detail::expect_eq(run, "exhaustive search count", descriptors.size(), found.size());
    std::sort(realized.begin(), realized.end(),
              [](const SemigroupSet& a, const SemigroupSet& b) {
                return a.elements() < b.elements();
              });
    detail::expect(run, "exhaustive search finds exactly the descriptor sets",
                   realized == found);
  }
  return run;
}

/// Maximal subsemigroups of the full monoid: the rank n-1 layer itself plus
/// the lifted descriptors, each verified maximal.
inline VerificationRun check_thm9(int n, const Budgets& budgets) {
  detail::require_budget(n, budgets.maximality, "maximality");
  VerificationRun run{"thm9", n, {}};
  const auto descriptors = maximal_descriptors_full(n);
  detail::expect_eq(run, "lifted descriptor count", rank_oriented(n, n - 1) + 1,
                    descriptors.size());
  const SemigroupSet whole = detail::enum_oriented(n);
  const Transformation id = Transformation::identity(n);
  for (const auto& d : descriptors) {
    const SemigroupSet s = realize(d);
    if (d.kind != MaximalDescriptor::Kind::drop_identity) {
      detail::expect(run, "lifted set contains the identity", s.contains(id));
    }
    detail::expect(run, std::string("maximality of ") + kind_name(d.kind)
                            + (d.m ? " degree " + std::to_string(*d.m)
                                   : d.alpha ? " " + format_transformation(*d.alpha) : ""),
                   is_maximal_in(s, whole));
  }
  return run;
}

/// The shift bijection between reversing maps one chain down and nilpotent
/// reversing maps: bijective and rank-preserving.
inline VerificationRun check_psi_bijection(int n, const Budgets& budgets) {
  detail::require_budget(n, budgets.enumeration, "enumeration");
  if (n < 5) throw std::domain_error("psi-bijection: need n >= 5");
  VerificationRun run{"psi-bijection", n, {}};
  FamilySelector below;
  below.n = n - 1;
  below.family = Family::reversing;
  std::vector<Transformation> shifted;
  for (const auto& a : enumerate_family(below)) {
    const Transformation image_elt = nilpotent_shift(a);
    detail::expect(run, "shift preserves rank of " + format_transformation(a),
                   rank(a) == rank(image_elt));
    detail::expect(run, "shift of " + format_transformation(a) + " is nilpotent reversing",
                   in_reversing(image_elt) && is_nilpotent_decreasing(image_elt));
    shifted.push_back(image_elt);
  }
  FamilySelector nil;
  nil.n = n;
  nil.family = Family::reversing;
  nil.nilpotents_only = true;
  detail::expect(run, "shift image is exactly the nilpotent reversing family",
                 SemigroupSet(n, shifted) == enumerate_family(nil));
  detail::expect_eq(run, "shift is injective", detail::count_family(n - 1, Family::reversing),
                    shifted.size());
  return run;
}

/// Structural constraints on reversing maps (image bounds, the tabular
/// shape, fix sets) plus seeded associativity sampling over decreasing maps.
inline VerificationRun check_eq1_constraints(int n, const Budgets& budgets,
                                             std::uint64_t seed = 0) {
  detail::require_budget(n, budgets.enumeration, "enumeration");
  VerificationRun run{"eq1-constraints", n, {}};
  FamilySelector sel;
  sel.n = n;
  sel.family = Family::reversing;
  for (const auto& a : enumerate_family(sel)) {
    const auto im = image(a);
    const int r = static_cast<int>(im.size());
    const int m = order_reversing_degree(a);
    const int a_r = im.back();
    bool ok = (r <= a_r) && (a_r <= m) && (r <= reversing_cap(n)) && (3 <= m) && (m <= n - 1);
    for (int x = 1; ok && x < m; ++x) ok = a(x) == 1;
    ok = ok && a(m) >= 3;
    for (int x = m; ok && x < n; ++x) ok = a(x) >= a(x + 1);
    const auto fix = fix_set(a);
    for (int f : fix) ok = ok && (f == 1 || f == m);
    if (!ok) detail::expect(run, "shape constraints for " + format_transformation(a), false);
  }
  std::mt19937_64 rng(seed);
  auto random_decreasing = [&] {
    std::vector<Transformation::value_type> img(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      img[static_cast<std::size_t>(i - 1)] = static_cast<Transformation::value_type>(
          std::uniform_int_distribution<int>(1, i)(rng));
    }
    return Transformation(std::move(img));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const Transformation a = random_decreasing();
    const Transformation b = random_decreasing();
    const Transformation c = random_decreasing();
    if (compose(compose(a, b), c) != compose(a, compose(b, c))) {
      detail::expect(run, "associativity spot-check", false);
      break;
    }
  }
  return run;
}

// --- registry ----------------------------------------------------------------

/// How a check's cells range over n and r.
struct CheckSpec {
  std::string id;
  int min_n = 4;
  /// Chain-size cap under the given budgets (checks beyond it are skipped in
  /// battery mode and rejected in single mode).
  std::function<int(const Budgets&)> n_cap;
  /// Valid r values at chain size n; empty means one r-less cell.
  std::function<std::vector<int>(int)> r_values;
  std::function<VerificationRun(int, std::optional<int>, const Budgets&, std::uint64_t)> fn;
};

inline std::vector<int> r_range(int lo, int hi) {
  std::vector<int> out;
  for (int r = lo; r <= hi; ++r) out.push_back(r);
  return out;
}

inline const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry = [] {
    std::vector<CheckSpec> checks;
    auto enum_cap = [](const Budgets& b) { return b.enumeration; };
    auto standard_r = [](int n) { return r_range(3, n - 1); };
    auto reversing_r = [](int n) { return r_range(3, reversing_cap(n)); };

    checks.push_back({"prop1", 4, enum_cap, reversing_r,
                      [](int n, std::optional<int> r, const Budgets& b, std::uint64_t) {
                        return check_prop1(n, *r, b);
                      }});
    checks.push_back({"lemma2", 4, enum_cap, nullptr,
                      [](int n, std::optional<int>, const Budgets& b, std::uint64_t) {
                        return check_lemma2(n, b);
                      }});
    checks.push_back({"cardinality", 4, enum_cap, standard_r,
                      [](int n, std::optional<int> r, const Budgets& b, std::uint64_t) {
                        return check_cardinality(n, *r, b);
                      }});
    checks.push_back({"opd-card", 4, enum_cap, [](int n) { return r_range(1, n); },
                      [](int n, std::optional<int> r, const Budgets& b, std::uint64_t) {
                        return check_opd_card(n, *r, b);
                      }});
    checks.push_back({"rothe-hagen", 4, [](const Budgets&) { return 1 << 20; }, reversing_r,
                      [](int n, std::optional<int> r, const Budgets& b, std::uint64_t) {
                        return check_rothe_hagen(n, *r, b);
                      }});
    checks.push_back({"prop4", 4, [](const Budgets& b) { return b.pair_search; }, standard_r,
                      [](int n, std::optional<int> r, const Budgets& b, std::uint64_t) {
                        return check_prop4(n, *r, b);
                      }});
    checks.push_back({"lemma5", 4, enum_cap, standard_r,
                      [](int n, std::optional<int> r, const Budgets& b, std::uint64_t) {
                        return check_lemma5(n, *r, b);
                      }});
    checks.push_back({"prop6", 4, enum_cap, standard_r,
                      [](int n, std::optional<int> r, const Budgets& b, std::uint64_t) {
                        return check_prop6(n, *r, b);
                      }});
    checks.push_back({"thm7", 4, [](const Budgets& b) { return b.closure; }, standard_r,
                      [](int n, std::optional<int> r, const Budgets& b, std::uint64_t) {
                        return check_thm7(n, *r, b);
                      }});
    checks.push_back({"prop8", 4, [](const Budgets& b) { return b.pair_search; }, standard_r,
                      [](int n, std::optional<int> r, const Budgets& b, std::uint64_t) {
                        return check_prop8(n, *r, b);
                      }});
    checks.push_back({"lemma9", 4, enum_cap, standard_r,
                      [](int n, std::optional<int> r, const Budgets& b, std::uint64_t) {
                        return check_lemma9(n, *r, b);
                      }});
    checks.push_back({"lemma10", 4, [](const Budgets& b) { return b.pair_search; }, standard_r,
                      [](int n, std::optional<int> r, const Budgets& b, std::uint64_t) {
                        return check_lemma10(n, *r, b);
                      }});
    checks.push_back({"thm8", 4, [](const Budgets& b) { return b.maximality; }, standard_r,
                      [](int n, std::optional<int> r, const Budgets& b, std::uint64_t) {
                        return check_thm8(n, *r, b);
                      }});
    checks.push_back({"thm9", 4, [](const Budgets& b) { return b.maximality; }, nullptr,
                      [](int n, std::optional<int>, const Budgets& b, std::uint64_t) {
                        return check_thm9(n, b);
                      }});
    checks.push_back({"psi-bijection", 5, enum_cap, nullptr,
                      [](int n, std::optional<int>, const Budgets& b, std::uint64_t) {
                        return check_psi_bijection(n, b);
                      }});
    checks.push_back({"eq1-constraints", 4, enum_cap, nullptr,
                      [](int n, std::optional<int>, const Budgets& b, std::uint64_t seed) {
                        return check_eq1_constraints(n, b, seed);
                      }});
    return checks;
  }();
  return registry;
}

inline const CheckSpec* find_check(const std::string& id) {
  for (const auto& spec : check_registry()) {
    if (spec.id == id) return &spec;
  }
  return nullptr;
}

/// Runs one cell with timing.
inline VerificationRun run_check(const CheckSpec& spec, int n, std::optional<int> r,
                                 const Budgets& budgets, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRun run = spec.fn(n, r, budgets, seed);
  run.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return run;
}

}  // namespace ordsemi
