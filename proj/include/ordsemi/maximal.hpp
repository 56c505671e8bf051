// Classification of the maximal subsemigroups of ORD(n, r): every maximal
// subsemigroup is the complement of a single generator from the canonical
// minimal generating set, except that a decomposable-regime reversing
// generator must be removed together with its whole class of maps sharing
// its image and minimal preimages. The full monoid ORD_n adds the identity
// on top of the r = n - 1 case.

#pragma once

#include <optional>
#include <vector>

#include "ordsemi/closure.hpp"
#include "ordsemi/enumerate.hpp"
#include "ordsemi/generators.hpp"
#include "ordsemi/transform.hpp"

namespace ordsemi {

/// All oriented decreasing maps with the same image and the same minimal
/// preimage of every image value as the degree-m reversing generator. The
/// generator itself always belongs to the class; in the undecomposable
/// regime the class is a singleton.
inline SemigroupSet reversing_generator_class(int n, int r, int m) {
  const int rhat = effective_rank(n, r).value;
  const Transformation g = reversing_generator(n, rhat, m);
  const auto target_image = image(g);
  std::vector<int> target_min(static_cast<std::size_t>(n) + 1, 0);
  for (int x = n; x >= 1; --x) target_min[static_cast<std::size_t>(g(x))] = x;

  FamilySelector sel;
  sel.n = n;
  sel.family = Family::oriented;
  std::vector<Transformation> out;
  visit(sel, [&](const std::vector<std::uint8_t>& img) {
    std::vector<int> min_pre(static_cast<std::size_t>(n) + 1, 0);
    for (int x = n; x >= 1; --x) min_pre[img[static_cast<std::size_t>(x - 1)]] = x;
    for (int v : target_image) {
      if (min_pre[static_cast<std::size_t>(v)] != target_min[static_cast<std::size_t>(v)]) return;
    }
    int rank_count = 0;
    for (int v = 1; v <= n; ++v) {
      if (min_pre[static_cast<std::size_t>(v)] != 0) ++rank_count;
    }
    if (rank_count != static_cast<int>(target_image.size())) return;
    out.emplace_back(img);
  });
  return SemigroupSet::from_sorted(n, std::move(out));
}

/// The unique idempotent with the given kernel that maps every class onto
/// its representative in the transversal.
inline Transformation idempotent_with(const KernelPartition& ker,
                                      const std::vector<int>& transversal) {
  if (transversal.size() != ker.classes().size()) {
    throw std::domain_error("idempotent_with: transversal size must equal class count");
  }
  std::vector<bool> in_transversal(static_cast<std::size_t>(ker.n()) + 1, false);
  for (int t : transversal) {
    if (t < 1 || t > ker.n()) throw std::domain_error("idempotent_with: point out of chain");
    if (in_transversal[static_cast<std::size_t>(t)]) {
      throw std::domain_error("idempotent_with: duplicate representative");
    }
    in_transversal[static_cast<std::size_t>(t)] = true;
  }
  std::vector<Transformation::value_type> img(static_cast<std::size_t>(ker.n()), 0);
  for (const auto& cls : ker.classes()) {
    int rep = 0;
    for (int x : cls.members) {
      if (in_transversal[static_cast<std::size_t>(x)]) {
        if (rep != 0) throw std::domain_error("idempotent_with: two representatives in one class");
        rep = x;
      }
    }
    if (rep == 0) throw std::domain_error("idempotent_with: class without representative");
    for (int x : cls.members) img[static_cast<std::size_t>(x - 1)] = static_cast<Transformation::value_type>(rep);
  }
  return Transformation(std::move(img));
}

/// Symbolic description of one maximal subsemigroup.
struct MaximalDescriptor {
  enum class Kind {
    drop_generator,            // remove one element of the OPD generating set
    drop_reversing_generator,  // remove an undecomposable reversing generator
    drop_reversing_class,      // remove a whole decomposable-regime class
    drop_identity,             // ORD(n, n-1) inside the full monoid
  };

  Kind kind = Kind::drop_generator;
  int n = 0;
  int r = 0;
  std::optional<Transformation> alpha;  // drop_generator
  std::optional<int> m;                 // drop_reversing_generator / _class
  bool full_semigroup = false;          // context is ORD_n; re-adjoin identity
};

inline const char* kind_name(MaximalDescriptor::Kind k) {
  using Kind = MaximalDescriptor::Kind;
  switch (k) {
    case Kind::drop_generator: return "drop-generator";
    case Kind::drop_reversing_generator: return "drop-reversing-generator";
    case Kind::drop_reversing_class: return "drop-reversing-class";
    case Kind::drop_identity: return "drop-identity";
  }
  return "?";
}

/// The complete list for ORD(n, r): one descriptor per element of the OPD
/// generating set, one per undecomposable reversing generator, and one per
/// decomposable-regime class. The total is C(n, r) + n + r - 5.
inline std::vector<MaximalDescriptor> maximal_descriptors(int n, int r) {
  if (n < 4 || r < 3 || r > n - 1) {
    throw std::domain_error("maximal_descriptors: need n >= 4 and 3 <= r <= n - 1");
  }
  const int rhat = effective_rank(n, r).value;
  std::vector<MaximalDescriptor> out;
  for (const auto& alpha : op_generating_set(n, r)) {
    MaximalDescriptor d;
    d.kind = MaximalDescriptor::Kind::drop_generator;
    d.n = n;
    d.r = r;
    d.alpha = alpha;
    out.push_back(std::move(d));
  }
  for (int m = n - rhat + 2; m <= n - 1; ++m) {
    MaximalDescriptor d;
    d.kind = MaximalDescriptor::Kind::drop_reversing_generator;
    d.n = n;
    d.r = r;
    d.m = m;
    out.push_back(std::move(d));
  }
  for (int m = 3; m <= n - rhat + 1; ++m) {
    MaximalDescriptor d;
    d.kind = MaximalDescriptor::Kind::drop_reversing_class;
    d.n = n;
    d.r = r;
    d.m = m;
    out.push_back(std::move(d));
  }
  return out;
}

/// The maximal subsemigroups of the full monoid ORD_n: ORD(n, n-1) itself,
/// plus every maximal subsemigroup of ORD(n, n-1) with the identity put back.
inline std::vector<MaximalDescriptor> maximal_descriptors_full(int n) {
  if (n < 4) throw std::domain_error("maximal_descriptors_full: need n >= 4");
  std::vector<MaximalDescriptor> out;
  MaximalDescriptor top;
  top.kind = MaximalDescriptor::Kind::drop_identity;
  top.n = n;
  top.r = n - 1;
  top.full_semigroup = true;
  out.push_back(std::move(top));
  for (auto d : maximal_descriptors(n, n - 1)) {
    d.full_semigroup = true;
    out.push_back(std::move(d));
  }
  return out;
}

/// The concrete subsemigroup a descriptor stands for.
inline SemigroupSet realize(const MaximalDescriptor& d) {
  FamilySelector sel;
  sel.n = d.n;
  sel.family = Family::oriented;
  sel.rank_max = d.r;
  SemigroupSet whole = enumerate_family(sel);
  SemigroupSet result(d.n);
  switch (d.kind) {
    case MaximalDescriptor::Kind::drop_generator:
      if (!d.alpha) throw std::domain_error("realize: descriptor missing its generator");
      result = whole.without(*d.alpha);
      break;
    case MaximalDescriptor::Kind::drop_reversing_generator: {
      if (!d.m) throw std::domain_error("realize: descriptor missing its degree");
      const int rhat = effective_rank(d.n, d.r).value;
      result = whole.without(reversing_generator(d.n, rhat, *d.m));
      break;
    }
    case MaximalDescriptor::Kind::drop_reversing_class:
      if (!d.m) throw std::domain_error("realize: descriptor missing its degree");
      result = whole.minus(reversing_generator_class(d.n, d.r, *d.m));
      break;
    case MaximalDescriptor::Kind::drop_identity:
      result = whole;  // ORD(n, n-1) already excludes the identity
      break;
  }
  if (d.full_semigroup && d.kind != MaximalDescriptor::Kind::drop_identity) {
    result = result.with(Transformation::identity(d.n));
  }
  return result;
}

}  // namespace ordsemi
