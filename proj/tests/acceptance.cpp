// Acceptance suite: every exact claim the library is built around, verified
// against independent brute force at full desk scale. Prints one line per
// criterion; exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "ordsemi/cli.hpp"
#include "ordsemi/closure.hpp"
#include "ordsemi/counting.hpp"
#include "ordsemi/enumerate.hpp"
#include "ordsemi/generators.hpp"
#include "ordsemi/maximal.hpp"
#include "ordsemi/verify.hpp"

using namespace ordsemi;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<std::vector<std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> problems;
  try {
    problems = body();
  } catch (const std::exception& e) {
    problems.push_back(std::string("exception: ") + e.what());
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  if (problems.empty()) {
    std::cout << "criterion " << number << ": PASS (" << ms << " ms) — " << label << "\n";
  } else {
    ++failures;
    std::cout << "criterion " << number << ": FAIL (" << ms << " ms) — " << label << "\n";
    for (const auto& p : problems) std::cout << "    " << p << "\n";
  }
  std::cout.flush();
}

void collect(std::vector<std::string>& problems, const VerificationRun& run) {
  for (const auto& d : run.details) {
    problems.push_back(run.check_id + " n=" + std::to_string(run.n)
                       + (run.r ? " r=" + std::to_string(*run.r) : "") + ": " + d.what
                       + " (expected " + d.expected + ", got " + d.actual + ")");
  }
}

SemigroupSet family_set(int n, Family f, std::optional<int> rank_max = {}) {
  FamilySelector sel;
  sel.n = n;
  sel.family = f;
  sel.rank_max = rank_max;
  return enumerate_family(sel);
}

}  // namespace

int main() {
  Budgets budgets;  // enumeration 10, closure 8, maximality 6, pair scans 7

  criterion(1, "|ORD(n,r)| closed form equals enumeration for 4<=n<=10, 3<=r<=n-1", [&] {
    std::vector<std::string> problems;
    for (int n = 4; n <= 10; ++n) {
      for (int r = 3; r <= n - 1; ++r) {
        const BigInt closed = count_oriented(n, r);
        const auto enumerated = detail::count_family(n, Family::oriented, r);
        if (closed != enumerated) {
          problems.push_back("n=" + std::to_string(n) + " r=" + std::to_string(r) + ": "
                             + closed.str() + " vs " + std::to_string(enumerated));
        }
      }
    }
    return problems;
  });

  criterion(2, "|RD*_n|, |J_{n,r}| and both slice formulas equal enumeration for 4<=n<=10", [&] {
    std::vector<std::string> problems;
    for (int n = 4; n <= 10; ++n) {
      collect(problems, check_lemma2(n, budgets));
      for (int r = 3; r <= reversing_cap(n); ++r) {
        collect(problems, check_prop1(n, r, budgets));
      }
    }
    return problems;
  });

  criterion(3, "nilpotent identities for 5<=n<=10 and the shift bijection for 5<=n<=9", [&] {
    std::vector<std::string> problems;
    for (int n = 5; n <= 10; ++n) {
      for (int r = 3; r <= n - 1; ++r) {
        const BigInt closed = count_nilpotent_oriented(n, r);
        const auto enumerated = detail::count_family(n, Family::oriented, r, {}, {}, true);
        if (closed != enumerated || closed != count_oriented(n - 1, r)) {
          problems.push_back("N(ORD(" + std::to_string(n) + "," + std::to_string(r) + ")): "
                             + closed.str() + " vs enumerated " + std::to_string(enumerated));
        }
      }
      for (int r = 3; r <= reversing_cap(n); ++r) {
        const BigInt previous =
            (r <= reversing_cap(n - 1)) ? count_reversing_rank(n - 1, r) : BigInt(0);
        const auto enumerated = detail::count_family(n, Family::reversing, {}, r, {}, true);
        if (previous != enumerated) {
          problems.push_back("N(J_{" + std::to_string(n) + "," + std::to_string(r) + "}): "
                             + previous.str() + " vs enumerated " + std::to_string(enumerated));
        }
      }
    }
    for (int n = 5; n <= 9; ++n) collect(problems, check_psi_bijection(n, budgets));
    return problems;
  });

  criterion(4, "generating set: closure, size, and minimality (closure to n=8, minimality to n=7)",
            [&] {
              std::vector<std::string> problems;
              for (int n = 4; n <= 8; ++n) {
                for (int r = 3; r <= n - 1; ++r) {
                  collect(problems, check_thm7(n, r, budgets));
                }
              }
              return problems;
            });

  criterion(5, "undecomposability of all canonical generators (n<=7) and the decomposition "
               "products (n<=9)",
            [&] {
              std::vector<std::string> problems;
              for (int n = 4; n <= 7; ++n) {
                for (int r = 3; r <= n - 1; ++r) {
                  collect(problems, check_prop4(n, r, budgets));
                  collect(problems, check_prop8(n, r, budgets));
                }
              }
              // product identities alone reach n = 9 (no pair scans needed)
              for (int n = 8; n <= 9; ++n) {
                for (int r = 3; r <= n - 1; ++r) {
                  const int rhat = effective_rank(n, r).value;
                  for (int m = 3; m <= n - rhat + 1; ++m) {
                    const auto g = reversing_generator(n, rhat, m);
                    const auto [a, b] = decomposition_pair(n, rhat, m);
                    if (compose(a, b) != g || a == g || b == g || !in_oriented_decreasing(a)
                        || !in_oriented_decreasing(b) || rank(a) > r || rank(b) > r) {
                      problems.push_back("decomposition pair failed at n=" + std::to_string(n)
                                         + " r=" + std::to_string(r) + " m=" + std::to_string(m));
                    }
                  }
                }
              }
              return problems;
            });

  criterion(6, "every reversing map of ORD(n,r) factors over the generators, n<=8", [&] {
    std::vector<std::string> problems;
    for (int n = 4; n <= 8; ++n) {
      for (int r = 3; r <= n - 1; ++r) {
        collect(problems, check_lemma5(n, r, budgets));
      }
    }
    return problems;
  });

  criterion(7, "maximal subsemigroup battery to n=6 plus exhaustive completeness at (4,3)", [&] {
    std::vector<std::string> problems;
    for (int n = 4; n <= 6; ++n) {
      for (int r = 3; r <= n - 1; ++r) {
        collect(problems, check_lemma9(n, r, budgets));
        collect(problems, check_lemma10(n, r, budgets));
        collect(problems, check_thm8(n, r, budgets));
      }
    }
    return problems;
  });

  criterion(8, "full-monoid maximal subsemigroups at n=4,5", [&] {
    std::vector<std::string> problems;
    for (int n = 4; n <= 5; ++n) collect(problems, check_thm9(n, budgets));
    return problems;
  });

  criterion(9, "Rothe-Hagen specialization for 4<=n<=40", [&] {
    std::vector<std::string> problems;
    for (int n = 4; n <= 40; ++n) {
      for (int r = 3; r <= reversing_cap(n); ++r) {
        collect(problems, check_rothe_hagen(n, r, budgets));
      }
    }
    return problems;
  });

  criterion(10, "module property suites exhaustively at n<=7", [&] {
    std::vector<std::string> problems;
    // orientation/monotone characterizations over every oriented decreasing map
    for (int n = 4; n <= 7; ++n) {
      const auto ord = family_set(n, Family::oriented);
      for (const auto& a : ord) {
        const bool both = is_orientation_preserving(a) && is_orientation_reversing(a);
        if (both != (rank(a) <= 2)) {
          problems.push_back("rank-two characterization failed: " + format_transformation(a));
        }
        if (rank(a) > 1) {
          if (is_orientation_preserving(a) && is_order_preserving(a) != (a(1) < a(n))) {
            problems.push_back("endpoint characterization failed: " + format_transformation(a));
          }
          if (is_orientation_reversing(a) && is_order_reversing(a) != (a(n) < a(1))) {
            problems.push_back("endpoint characterization failed: " + format_transformation(a));
          }
        }
      }
      collect(problems, check_eq1_constraints(n, budgets, 0));
      collect(problems, check_opd_card(n, 1, budgets));
      collect(problems, check_cardinality(n, 3, budgets));
    }
    // fix sets of products intersect, exhaustively over the decreasing monoid
    {
      const int n = 7;
      const auto all = family_set(n, Family::decreasing);
      std::vector<std::uint64_t> fix_masks;
      fix_masks.reserve(all.size());
      for (const auto& a : all) {
        std::uint64_t mask = 0;
        for (int x : fix_set(a)) mask |= (1ull << x);
        fix_masks.push_back(mask);
      }
      std::vector<Transformation::value_type> scratch;
      bool fix_law = true;
      for (std::size_t i = 0; i < all.size() && fix_law; ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
          detail::compose_into(all[i], all[j], scratch);
          std::uint64_t mask = 0;
          for (int x = 1; x <= n; ++x) {
            if (scratch[static_cast<std::size_t>(x - 1)] == x) mask |= (1ull << x);
          }
          if (mask != (fix_masks[i] & fix_masks[j])) {
            fix_law = false;
            problems.push_back("fix intersection law failed at pair "
                               + format_transformation(all[i]) + ", "
                               + format_transformation(all[j]));
            break;
          }
        }
      }
    }
    // every degree needs its own reversing element (closure restatement)
    for (int n = 4; n <= 6; ++n) {
      for (int r = 3; r <= n - 1; ++r) {
        collect(problems, check_prop6(n, r, budgets));
      }
    }
    // closure laws on the canonical generating sets
    for (int n = 4; n <= 6; ++n) {
      for (int r = 3; r <= n - 1; ++r) {
        const auto gens = minimal_generating_set(n, r);
        const auto once = close(gens);
        if (!gens.subset_of(once) || close(once) != once) {
          problems.push_back("closure extensivity/idempotence failed at n=" + std::to_string(n)
                             + " r=" + std::to_string(r));
        }
        const auto sub = close(op_generating_set(n, r));
        if (!sub.subset_of(once)) {
          problems.push_back("closure monotonicity failed at n=" + std::to_string(n)
                             + " r=" + std::to_string(r));
        }
      }
    }
    return problems;
  });

  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
