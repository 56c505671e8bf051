// The named transformation families behind the generating-set and rank
// results: step idempotents, prefix identities, the degree-graded idempotent
// layers, the canonical orientation-reversing generators, the decomposition
// pair witnessing which of those are products, and the constructive
// factorization of an arbitrary reversing map over them.

#pragma once

#include <set>
#include <vector>

#include "ordsemi/closure.hpp"
#include "ordsemi/counting.hpp"
#include "ordsemi/enumerate.hpp"
#include "ordsemi/transform.hpp"

namespace ordsemi {

/// The unique order-preserving decreasing idempotent with image Y (1 in Y):
/// each point maps to the largest element of Y not above it.
inline Transformation step_idempotent(int n, const std::vector<int>& image_set) {
  if (n < 1) throw std::domain_error("step_idempotent: need n >= 1");
  std::set<int> ys(image_set.begin(), image_set.end());
  if (ys.empty() || *ys.begin() != 1 || *ys.rbegin() > n) {
    throw std::domain_error("step_idempotent: image must contain 1 and lie in [1, n]");
  }
  std::vector<Transformation::value_type> img(static_cast<std::size_t>(n));
  int current = 1;
  auto it = ys.begin();
  for (int x = 1; x <= n; ++x) {
    while (it != ys.end() && *it <= x) current = *it++;
    img[static_cast<std::size_t>(x - 1)] = static_cast<Transformation::value_type>(current);
  }
  return Transformation(std::move(img));
}

/// Fixes 1..m and collapses everything above m to 1.
inline Transformation prefix_identity(int n, int m) {
  if (m < 2 || m > n) throw std::domain_error("prefix_identity: need 2 <= m <= n");
  std::vector<Transformation::value_type> img(static_cast<std::size_t>(n), 1);
  for (int x = 1; x <= m; ++x) img[static_cast<std::size_t>(x - 1)] = static_cast<Transformation::value_type>(x);
  return Transformation(std::move(img));
}

/// Rank-r idempotents of OPD_n with order-preserving degree exactly m;
/// there are C(m-1, r-1) of them.
inline SemigroupSet degree_idempotents(int n, int r, int m) {
  return enumerate_family(degree_idempotent_selector(n, r, m));
}

/// The canonical minimal generating set of OPD(n, r): all rank-r idempotents
/// of degree above r together with the prefix identities up to r. Its size
/// is C(n, r) + r - 2, the rank of OPD(n, r).
inline SemigroupSet op_generating_set(int n, int r) {
  if (r < 2 || r > n - 1) throw std::domain_error("op_generating_set: need 2 <= r <= n - 1");
  std::vector<Transformation> out;
  for (int m = r + 1; m <= n; ++m) {
    for (const auto& t : degree_idempotents(n, r, m)) out.push_back(t);
  }
  for (int m = 2; m <= r; ++m) out.push_back(prefix_identity(n, m));
  return SemigroupSet(n, std::move(out));
}

/// The two shapes a reversing generator can take: for low degree the
/// descending run is clipped by the rank cap and the tail collapses to 1
/// (such generators factor into orientation-preserving-by-reversing
/// products); for high degree the run reaches the last point and the
/// generator is undecomposable.
enum class Regime { decomposable, undecomposable };

struct ReversingGeneratorSpec {
  int n = 0;
  int rhat = 0;
  int m = 0;
  Regime regime = Regime::decomposable;
  int p = 0;  // max(0, m - rhat); meaningful in the decomposable regime
};

inline ReversingGeneratorSpec reversing_generator_spec(int n, int rhat, int m) {
  if (rhat < 3 || rhat > reversing_cap(n)) {
    throw std::domain_error("reversing_generator_spec: need 3 <= rhat <= ceil((n+1)/2)");
  }
  if (m < 3 || m > n - 1) {
    throw std::domain_error("reversing_generator_spec: need 3 <= m <= n - 1");
  }
  ReversingGeneratorSpec spec;
  spec.n = n;
  spec.rhat = rhat;
  spec.m = m;
  spec.regime = (m <= n - rhat + 1) ? Regime::decomposable : Regime::undecomposable;
  spec.p = std::max(0, m - rhat);
  return spec;
}

/// The reversing generator of degree m at effective rank cap rhat: 1 on the
/// prefix below m, then a descending run starting at m; in the decomposable
/// regime the run stops at value p + 2 and the tail collapses to 1, in the
/// undecomposable regime it continues to the last point.
inline Transformation reversing_generator(int n, int rhat, int m) {
  const auto spec = reversing_generator_spec(n, rhat, m);
  std::vector<Transformation::value_type> img(static_cast<std::size_t>(n), 1);
  const int run_end = (spec.regime == Regime::decomposable) ? 2 * m - spec.p - 2 : n;
  for (int x = m; x <= run_end; ++x) {
    img[static_cast<std::size_t>(x - 1)] = static_cast<Transformation::value_type>(2 * m - x);
  }
  return Transformation(std::move(img));
}

/// The n - 3 reversing generators of ORD(n, r), one per degree in [3, n-1].
inline SemigroupSet reversing_generators(int n, int r) {
  if (r < 3 || r > n - 1) throw std::domain_error("reversing_generators: need 3 <= r <= n - 1");
  const int rhat = effective_rank(n, r).value;
  std::vector<Transformation> out;
  for (int m = 3; m <= n - 1; ++m) out.push_back(reversing_generator(n, rhat, m));
  return SemigroupSet(n, std::move(out));
}

/// The minimal generating set of ORD(n, r); its size is C(n, r) + n + r - 5.
inline SemigroupSet minimal_generating_set(int n, int r) {
  if (n < 4 || r < 3 || r > n - 1) {
    throw std::domain_error("minimal_generating_set: need n >= 4 and 3 <= r <= n - 1");
  }
  return op_generating_set(n, r).unioned(reversing_generators(n, r));
}

/// For a decomposable-regime generator, the witnessing factors: the first is
/// orientation-preserving (an idempotent fixing the run interval), the
/// second orientation-reversing, neither equals the generator, and their
/// product is exactly reversing_generator(n, rhat, m).
inline std::pair<Transformation, Transformation> decomposition_pair(int n, int rhat, int m) {
  const auto spec = reversing_generator_spec(n, rhat, m);
  if (spec.regime != Regime::decomposable) {
    throw std::domain_error("decomposition_pair: generator of degree m is undecomposable");
  }
  const int p = spec.p;
  std::vector<Transformation::value_type> first(static_cast<std::size_t>(n), 1);
  for (int x = m; x <= 2 * m - p - 2; ++x) {
    first[static_cast<std::size_t>(x - 1)] = static_cast<Transformation::value_type>(x);
  }
  std::vector<Transformation::value_type> second(static_cast<std::size_t>(n), 1);
  for (int x = m; x <= 2 * m - p - 3; ++x) {
    second[static_cast<std::size_t>(x - 1)] = static_cast<Transformation::value_type>(2 * m - x);
  }
  for (int x = 2 * m - p - 2; x <= n; ++x) {
    second[static_cast<std::size_t>(x - 1)] = static_cast<Transformation::value_type>(p + 2);
  }
  return {Transformation(std::move(first)), Transformation(std::move(second))};
}

enum class FactorClass {
  orientation_preserving,  // lies in OPD(n, r)
  reversing_generator,     // the single reversing_generator factor
  order_preserving,        // lies in C(n, r)
};

inline const char* factor_class_name(FactorClass c) {
  switch (c) {
    case FactorClass::orientation_preserving: return "orientation-preserving";
    case FactorClass::reversing_generator: return "reversing-generator";
    case FactorClass::order_preserving: return "order-preserving";
  }
  return "?";
}

/// A word over OPD(n, r) and one reversing generator whose left-to-right
/// product is the target.
struct FactorizationWitness {
  Transformation target;
  std::vector<Transformation> word;
  std::vector<FactorClass> classes;

  Transformation product() const {
    Transformation acc = word.front();
    for (std::size_t i = 1; i < word.size(); ++i) acc = compose(acc, word[i]);
    return acc;
  }
};

/// Writes a reversing map of ORD(n, r) as b1 * g * b2 or b1 * g * d * b2
/// with g the reversing generator of matching degree, b1, b2
/// orientation-preserving and d order-preserving.
inline FactorizationWitness factorize(const Transformation& a, int n, int r) {
  if (a.n() != n) throw std::domain_error("factorize: chain size mismatch");
  if (r < 3 || r > n) throw std::domain_error("factorize: need 3 <= r <= n");
  if (!in_reversing(a) || rank(a) > r) {
    throw std::domain_error("factorize: element is not a reversing map of rank <= r");
  }
  const int m = order_reversing_degree(a);
  const auto im = image(a);  // {1 = a_1 < a_2 < ... < a_k}
  const int k = static_cast<int>(im.size());
  const int rhat = effective_rank(n, r).value;

  // index of each image value: value im[i-1] is the i-th lowest
  std::vector<int> value_index(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= k; ++i) value_index[static_cast<std::size_t>(im[static_cast<std::size_t>(i - 1)])] = i;

  // b1 lifts the preimage blocks onto the interval [m, m+k-2], highest image
  // value first; the trailing 1-block (if any) stays at 1.
  std::vector<Transformation::value_type> b1(static_cast<std::size_t>(n), 1);
  for (int x = m; x <= n; ++x) {
    const int v = a(x);
    if (v != 1) {
      b1[static_cast<std::size_t>(x - 1)] =
          static_cast<Transformation::value_type>(m + k - value_index[static_cast<std::size_t>(v)]);
    }
  }
  // b2 relabels [m-k+2, m] with the actual image values.
  std::vector<Transformation::value_type> b2(static_cast<std::size_t>(n), 1);
  for (int i = 2; i < k; ++i) {
    b2[static_cast<std::size_t>(m - k + i - 1)] =
        static_cast<Transformation::value_type>(im[static_cast<std::size_t>(i - 1)]);
  }
  for (int x = m; x <= n; ++x) {
    b2[static_cast<std::size_t>(x - 1)] =
        static_cast<Transformation::value_type>(im[static_cast<std::size_t>(k - 1)]);
  }

  FactorizationWitness w{a, {}, {}};
  w.word.push_back(Transformation(std::move(b1)));
  w.classes.push_back(FactorClass::orientation_preserving);
  w.word.push_back(reversing_generator(n, rhat, m));
  w.classes.push_back(FactorClass::reversing_generator);
  if (m + k - 2 != n) {
    std::vector<int> y{1};
    for (int x = m - k + 2; x <= m; ++x) y.push_back(x);
    w.word.push_back(step_idempotent(n, y));
    w.classes.push_back(FactorClass::order_preserving);
  }
  w.word.push_back(Transformation(std::move(b2)));
  w.classes.push_back(FactorClass::orientation_preserving);

  if (w.product() != a) {
    throw std::logic_error("factorize: witness product mismatch");
  }
  return w;
}

}  // namespace ordsemi
