// Exact closed-form counts and ranks for the oriented order-decreasing
// monoids, plus the specialised Rothe-Hagen binomial identity. Everything is
// computed over arbitrary-precision integers; every division below is exact.

#pragma once

#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordsemi {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k); zero when k < 0 or k > n.
inline BigInt binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative upper index");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
  }
  return result;
}

inline BigInt catalan_number(long m) {
  if (m < 0) throw std::domain_error("catalan_number: negative index");
  return binomial(2 * m, m) / (m + 1);
}

inline BigInt narayana(long m, long k) {
  if (m < 1 || k < 1 || k > m) throw std::domain_error("narayana: need 1 <= k <= m");
  return binomial(m, k) * binomial(m, k - 1) / m;
}

/// ceil((n+1)/2), the largest possible image size of a reversing map.
inline int reversing_cap(int n) { return (n + 2) / 2; }

/// r-hat: the effective rank cap min(r, ceil((n+1)/2)) used by the
/// reversing generators.
struct RHat {
  int n = 0;
  int r = 0;
  int value = 0;
};

inline RHat effective_rank(int n, int r) {
  if (r < 1 || r > n) throw std::domain_error("effective_rank: need 1 <= r <= n");
  return RHat{n, r, std::min(r, reversing_cap(n))};
}

/// |{reversing maps of rank exactly r}| = C(n+1, 2r-1).
inline BigInt count_reversing_rank(int n, int r) {
  if (r < 3 || r > reversing_cap(n)) {
    throw std::domain_error("count_reversing_rank: need 3 <= r <= ceil((n+1)/2)");
  }
  return binomial(n + 1, 2 * r - 1);
}

/// |{reversing maps of rank r and order-reversing degree m}|
///   = C(m-1, r-1) * C(n-m+1, r-1).
inline BigInt count_reversing_rank_by_degree(int n, int r, int m) {
  if (r < 3 || r > reversing_cap(n)) {
    throw std::domain_error("count_reversing_rank_by_degree: rank out of range");
  }
  if (m < r || m > n - r + 2) {
    throw std::domain_error("count_reversing_rank_by_degree: need r <= m <= n - r + 2");
  }
  return binomial(m - 1, r - 1) * binomial(n - m + 1, r - 1);
}

/// |RD*_n| = 2^n - (n^3 + 5n + 6)/6.
inline BigInt count_reversing(int n) {
  if (n < 4) throw std::domain_error("count_reversing: need n >= 4");
  BigInt nn = n;
  return (BigInt(1) << n) - (nn * nn * nn + 5 * nn + 6) / 6;
}

/// |{reversing maps of order-reversing degree m}| = C(n, m-1) - m - (m-1)(n-m).
inline BigInt count_reversing_by_degree(int n, int m) {
  if (n < 4) throw std::domain_error("count_reversing_by_degree: need n >= 4");
  if (m < 3 || m > n - 1) throw std::domain_error("count_reversing_by_degree: need 3 <= m <= n - 1");
  return binomial(n, m - 1) - m - BigInt(m - 1) * (n - m);
}

/// |OPD(n, r)| = -n + 1 + sum_{m<=r} C_m + sum_{m>r} sum_{k<=r} N(m, k).
inline BigInt count_orientation_preserving(int n, int r) {
  if (n < 1 || r < 1 || r > n) {
    throw std::domain_error("count_orientation_preserving: need 1 <= r <= n");
  }
  BigInt total = 1 - n;
  for (long m = 1; m <= r; ++m) total += catalan_number(m);
  for (long m = r + 1; m <= n; ++m) {
    for (long k = 1; k <= r; ++k) total += narayana(m, k);
  }
  return total;
}

/// |ORD_n| = 2^n - (n^3 + 11n)/6 + sum_{m<=n} C_m.
inline BigInt count_oriented_all(int n) {
  if (n < 4) throw std::domain_error("count_oriented_all: need n >= 4");
  BigInt nn = n;
  BigInt total = (BigInt(1) << n) - (nn * nn * nn + 11 * nn) / 6;
  for (long m = 1; m <= n; ++m) total += catalan_number(m);
  return total;
}

/// |ORD(n, r)| = |OPD(n, r)| + sum_{k=3}^{r-hat} C(n+1, 2k-1).
///
/// The sum formula is for 3 <= r <= n; the degenerate ranks delegate to the
/// identities ORD(n,1) = C(n,1) = {zero} and ORD(n,2) = OPD(n,2).
inline BigInt count_oriented(int n, int r) {
  if (n < 4) throw std::domain_error("count_oriented: need n >= 4");
  if (r < 1 || r > n) throw std::domain_error("count_oriented: need 1 <= r <= n");
  if (r == 1) return 1;
  if (r == 2) return count_orientation_preserving(n, 2);
  BigInt total = count_orientation_preserving(n, r);
  const int rhat = effective_rank(n, r).value;
  for (int k = 3; k <= rhat; ++k) total += binomial(n + 1, 2 * k - 1);
  return total;
}

/// |N(ORD(n, r))| = |ORD(n-1, r)| for n >= 5.
inline BigInt count_nilpotent_oriented(int n, int r) {
  if (n < 5) throw std::domain_error("count_nilpotent_oriented: need n >= 5");
  if (r < 1 || r > n - 1) throw std::domain_error("count_nilpotent_oriented: rank out of range");
  return count_oriented(n - 1, r);
}

/// Both sides of the Rothe-Hagen identity specialised at
/// (a, b, c, m) = (r, 1, n-r+1, n-2r+2):
///   sum_k C(r-1+k, k) C(n-r+1-k, n-2r+2-k) = C(n+1, 2r-1).
inline std::pair<BigInt, BigInt> rothe_hagen_specialized(int n, int r) {
  if (r < 3 || r > reversing_cap(n)) {
    throw std::domain_error("rothe_hagen_specialized: need 3 <= r <= ceil((n+1)/2)");
  }
  BigInt lhs = 0;
  const long m = n - 2L * r + 2;
  for (long k = 0; k <= m; ++k) {
    lhs += binomial(r - 1 + k, k) * binomial(n - r + 1 - k, m - k);
  }
  return {lhs, binomial(n + 1, 2 * r - 1)};
}

/// rank(ORD(n, r)) = C(n, r) + n + r - 5.
inline BigInt rank_oriented(int n, int r) {
  if (n < 4) throw std::domain_error("rank_oriented: need n >= 4");
  if (r < 3 || r > n - 1) throw std::domain_error("rank_oriented: need 3 <= r <= n - 1");
  return binomial(n, r) + n + r - 5;
}

/// rank(ORD_n) = 3n - 5.
inline BigInt rank_oriented_all(int n) {
  if (n < 4) throw std::domain_error("rank_oriented_all: need n >= 4");
  return 3 * BigInt(n) - 5;
}

/// One closed-form count paired with an optional enumerated cross-check.
struct CountReport {
  int n = 0;
  std::optional<int> r;
  std::optional<int> m;
  std::string family;
  BigInt closed_form;
  std::optional<BigInt> enumerated;
  std::optional<bool> match;

  void set_enumerated(BigInt value) {
    enumerated = std::move(value);
    match = (*enumerated == closed_form);
  }
};

}  // namespace ordsemi
