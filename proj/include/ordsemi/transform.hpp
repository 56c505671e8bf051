// Value types and predicates for full transformations of the chain
// {1 < 2 < ... < n}, the building blocks for the oriented order-decreasing
// monoids handled by this library.
//
// Conventions used throughout:
//   * transformations act on the right: x(ab) = (xa)b, so compose(a, b)
//     applies a first;
//   * all externally visible indices and image values are 1-based;
//   * a transformation is stored as its image tuple (1a, 2a, ..., na).

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordsemi {

/// Raised by parse_transformation; position is the 1-based token index.
class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a computation exceeds an explicit resource budget.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A full transformation of {1..n}, stored as its image tuple.
///
/// Values are immutable after construction; all operations on
/// transformations are pure, so concurrent use needs no synchronisation.
class Transformation {
 public:
  using value_type = std::uint8_t;

  explicit Transformation(std::vector<value_type> images)
      : images_(std::move(images)) {
    if (images_.empty()) {
      throw std::invalid_argument("transformation requires chain size >= 1");
    }
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] < 1 || images_[i] > images_.size()) {
        throw std::invalid_argument(
            "image value out of range [1, n] at position "
            + std::to_string(i + 1));
      }
    }
  }

  explicit Transformation(std::initializer_list<int> images)
      : Transformation(to_bytes(images)) {}

  /// The identity 1_n.
  static Transformation identity(int n) {
    check_n(n);
    std::vector<value_type> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<value_type>(i + 1);
    return Transformation(std::move(img));
  }

  /// The constant map onto 1 (the zero element of the decreasing monoid).
  static Transformation zero(int n) {
    check_n(n);
    return Transformation(std::vector<value_type>(static_cast<std::size_t>(n), 1));
  }

  int n() const noexcept { return static_cast<int>(images_.size()); }

  /// Image of the point x (1-based).
  int operator()(int x) const {
    if (x < 1 || x > n()) throw std::domain_error("point out of chain");
    return images_[static_cast<std::size_t>(x - 1)];
  }

  const std::vector<value_type>& images() const& noexcept { return images_; }
  std::vector<value_type> images() && { return std::move(images_); }

  friend bool operator==(const Transformation&, const Transformation&) = default;
  /// Lexicographic order on image tuples; the library-wide canonical order.
  friend auto operator<=>(const Transformation& a, const Transformation& b) {
    return std::lexicographical_compare_three_way(
        a.images_.begin(), a.images_.end(), b.images_.begin(), b.images_.end());
  }

 private:
  static void check_n(int n) {
    if (n < 1 || n > 255) throw std::invalid_argument("chain size must be in [1, 255]");
  }
  static std::vector<value_type> to_bytes(std::initializer_list<int> images) {
    std::vector<value_type> out;
    out.reserve(images.size());
    for (int v : images) {
      if (v < 0 || v > 255) throw std::invalid_argument("image value out of byte range");
      out.push_back(static_cast<value_type>(v));
    }
    return out;
  }

  std::vector<value_type> images_;
};

namespace detail {

/// compose(a, b) written into a caller-provided buffer (resized to n).
inline void compose_into(const Transformation& a, const Transformation& b,
                         std::vector<Transformation::value_type>& out) {
  const auto& ia = a.images();
  const auto& ib = b.images();
  out.resize(ia.size());
  for (std::size_t i = 0; i < ia.size(); ++i) out[i] = ib[ia[i] - 1];
}

}  // namespace detail

/// x(ab) = (xa)b: apply a first, then b.
inline Transformation compose(const Transformation& a, const Transformation& b) {
  if (a.n() != b.n()) throw std::domain_error("compose: chain size mismatch");
  std::vector<Transformation::value_type> out;
  detail::compose_into(a, b, out);
  return Transformation(std::move(out));
}

/// Sorted image set {xa : x in X_n}.
inline std::vector<int> image(const Transformation& a) {
  std::vector<int> out(a.images().begin(), a.images().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// |image(a)|.
inline int rank(const Transformation& a) {
  return static_cast<int>(image(a).size());
}

/// Sorted fixed-point set {x : xa = x}.
inline std::vector<int> fix_set(const Transformation& a) {
  std::vector<int> out;
  for (int x = 1; x <= a.n(); ++x) {
    if (a(x) == x) out.push_back(x);
  }
  return out;
}

/// One kernel class: the preimage of a single image value.
struct KernelClass {
  std::vector<int> members;  // sorted ascending
  int value = 0;             // common image of the members
  int transversal_min = 0;   // least member
};

/// The partition of {1..n} into preimage classes of a transformation,
/// listed in decreasing image-value order.
class KernelPartition {
 public:
  KernelPartition(int n, std::vector<KernelClass> classes)
      : n_(n), classes_(std::move(classes)) {}

  int n() const noexcept { return n_; }
  // by value on rvalues, so iterating classes of a temporary never dangles
  const std::vector<KernelClass>& classes() const& noexcept { return classes_; }
  std::vector<KernelClass> classes() && { return std::move(classes_); }

 private:
  int n_;
  std::vector<KernelClass> classes_;
};

inline KernelPartition kernel(const Transformation& a) {
  std::vector<KernelClass> classes;
  for (int v = a.n(); v >= 1; --v) {
    KernelClass cls;
    cls.value = v;
    for (int x = 1; x <= a.n(); ++x) {
      if (a(x) == v) cls.members.push_back(x);
    }
    if (!cls.members.empty()) {
      cls.transversal_min = cls.members.front();
      classes.push_back(std::move(cls));
    }
  }
  return KernelPartition(a.n(), std::move(classes));
}

inline bool is_order_preserving(const Transformation& a) {
  for (int x = 1; x < a.n(); ++x) {
    if (a(x) > a(x + 1)) return false;
  }
  return true;
}

inline bool is_order_reversing(const Transformation& a) {
  for (int x = 1; x < a.n(); ++x) {
    if (a(x) < a(x + 1)) return false;
  }
  return true;
}

/// xa <= x for all x.
inline bool is_order_decreasing(const Transformation& a) {
  for (int x = 1; x <= a.n(); ++x) {
    if (a(x) > x) return false;
  }
  return true;
}

namespace detail {

// Descents of the image sequence read cyclically: positions i in {1..n}
// with (i+1)a < ia, where (n+1)a means 1a.
inline int cyclic_descents(const Transformation& a) {
  int count = 0;
  for (int i = 1; i <= a.n(); ++i) {
    int next = (i == a.n()) ? a(1) : a(i + 1);
    if (next < a(i)) ++count;
  }
  return count;
}

inline int cyclic_ascents(const Transformation& a) {
  int count = 0;
  for (int i = 1; i <= a.n(); ++i) {
    int next = (i == a.n()) ? a(1) : a(i + 1);
    if (next > a(i)) ++count;
  }
  return count;
}

}  // namespace detail

/// The image sequence is cyclic: at most one descent, read with wraparound.
inline bool is_orientation_preserving(const Transformation& a) {
  return detail::cyclic_descents(a) <= 1;
}

/// The image sequence is anti-cyclic: at most one ascent, read with wraparound.
inline bool is_orientation_reversing(const Transformation& a) {
  return detail::cyclic_ascents(a) <= 1;
}

inline bool is_oriented(const Transformation& a) {
  return is_orientation_preserving(a) || is_orientation_reversing(a);
}

inline bool is_idempotent(const Transformation& a) {
  return compose(a, a) == a;
}

/// Membership predicates for the monoids this library is about.
inline bool in_catalan(const Transformation& a) {  // C_n
  return is_order_preserving(a) && is_order_decreasing(a);
}
inline bool in_op_decreasing(const Transformation& a) {  // OPD_n
  return is_orientation_preserving(a) && is_order_decreasing(a);
}
inline bool in_oriented_decreasing(const Transformation& a) {  // ORD_n
  return is_oriented(a) && is_order_decreasing(a);
}
inline bool in_reversing(const Transformation& a) {  // RD*_n
  return is_order_decreasing(a) && is_oriented(a) && !is_orientation_preserving(a);
}

/// For decreasing maps, a^k eventually equals the zero map iff fix(a) = {1}.
inline bool is_nilpotent_decreasing(const Transformation& a) {
  if (!is_order_decreasing(a)) {
    throw std::domain_error("nilpotency is defined on order-decreasing maps only");
  }
  auto fix = fix_set(a);
  return fix.size() == 1 && fix.front() == 1;
}

/// Largest m such that the restriction to {1..m} is order-preserving.
/// Defined on orientation-preserving decreasing maps; equals n exactly when
/// the map is order-preserving throughout.
inline int order_preserving_degree(const Transformation& a) {
  if (!in_op_decreasing(a)) {
    throw std::domain_error(
        "order_preserving_degree requires an orientation-preserving decreasing map");
  }
  int m = 1;
  while (m < a.n() && a(m) <= a(m + 1)) ++m;
  return m;
}

/// Least point mapped away from 1. Defined on oriented decreasing maps that
/// are not orientation-preserving; the result m always lies in [3, n-1].
inline int order_reversing_degree(const Transformation& a) {
  if (!in_reversing(a)) {
    throw std::domain_error(
        "order_reversing_degree requires an oriented decreasing map "
        "that is not orientation-preserving");
  }
  for (int x = 1; x <= a.n(); ++x) {
    if (a(x) != 1) return x;
  }
  throw std::logic_error("unreachable: reversing maps are never constant");
}

/// Parses a line of whitespace-separated 1-based image values.
inline Transformation parse_transformation(std::string_view text) {
  std::vector<Transformation::value_type> img;
  std::vector<long> raw;
  std::size_t pos = 0;
  const std::size_t len = text.size();
  std::size_t token_index = 0;
  while (pos < len) {
    while (pos < len && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
    if (pos >= len) break;
    ++token_index;
    std::size_t start = pos;
    while (pos < len && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\r') ++pos;
    std::string_view token = text.substr(start, pos - start);
    long value = 0;
    bool ok = !token.empty();
    for (char c : token) {
      if (c < '0' || c > '9') { ok = false; break; }
      value = value * 10 + (c - '0');
      if (value > 100000) { ok = false; break; }
    }
    if (!ok) {
      throw parse_error("expected a positive integer, got \"" + std::string(token)
                        + "\" at position " + std::to_string(token_index),
                        token_index);
    }
    raw.push_back(value);
  }
  if (raw.empty()) throw parse_error("empty transformation", 0);
  const long n = static_cast<long>(raw.size());
  if (n > 255) throw parse_error("chain size exceeds 255", 1);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 1 || raw[i] > n) {
      throw parse_error("entry " + std::to_string(raw[i]) + " out of range [1, "
                        + std::to_string(n) + "] at position " + std::to_string(i + 1),
                        i + 1);
    }
    img.push_back(static_cast<Transformation::value_type>(raw[i]));
  }
  return Transformation(std::move(img));
}

inline std::string format_transformation(const Transformation& a) {
  std::string out;
  for (int x = 1; x <= a.n(); ++x) {
    if (x > 1) out.push_back(' ');
    out += std::to_string(a(x));
  }
  return out;
}

}  // namespace ordsemi
