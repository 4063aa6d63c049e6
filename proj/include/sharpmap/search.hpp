#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sharpmap/polynomial.hpp"
#include "sharpmap/system.hpp"

namespace sharpmap {

// Thrown by the list-returning searches when the configured budget would be
// exceeded; partial results are never silently reported.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SearchBudget {
  int max_support = -1;                      // -1: no cap on support size
  long long max_combinations = 10'000'000;   // supports examined, all levels
  int workers = 1;
};

// One feasible support together with its exact solution.
struct SupportSolution {
  std::vector<int> support;          // sorted column indices
  std::map<int, Rational> values;    // strictly positive exactly on support
  int l0 = 0;                        // |support|
  Rational l1;                       // sum of the values
  Polynomial polynomial;             // reassembled (pinned terms included)
};

struct SearchReport {
  bool feasible = false;
  int min_l0 = -1;                   // -1 when no solution was found
  std::vector<SupportSolution> witnesses;
  long long nodes_explored = 0;      // supports examined
  long long prunes_by_certificate = 0;  // skipped: no distinguished column
  long long nonisolated_supports = 0;   // consistent but underdetermined
  bool budget_exhausted = false;
};

struct SymmetricReport {
  bool feasible = false;
  int min_terms = -1;                // minimum monomial count, -1 if none
  std::vector<SupportSolution> witnesses;
  long long nodes_explored = 0;
  long long prunes_by_certificate = 0;
  bool budget_exhausted = false;
};

// Smallest support size admitting an exact nonnegative solution of T u = v,
// ascending from size 0.  With degree_constrained, only supports meeting the
// distinguished (top-degree) columns count.  With enumerate_all, every
// minimal support is reported; otherwise just the first in sorted order.
// Levels are processed whole: reports are identical for any worker count,
// and a budget overrun never yields a partially explored level.
SearchReport min_l0(const LinearSystem& sys, bool degree_constrained,
                    bool enumerate_all, const SearchBudget& budget = {});

// Predicted minimal term count of a degree-d solution: (d+3)/2 for n=2 odd d,
// d/2+2 for n=2 even d, d(n-1)+1 for n >= 3.
int sharp_bound(int n, int d);

// All degree-d solutions (n=2, d odd) with exactly (d+3)/2 terms, found on
// the pinned/reduced system and reassembled.  Sorted; throws BudgetExceeded
// rather than returning a truncated list.
std::vector<Polynomial> uniqueness_test(int d, const SearchBudget& budget = {});

// Minimum monomial count over nonnegative symmetric-basis solutions of
// degree exactly d (a column with b != 0 contributes two monomials).
SymmetricReport symmetric_min_terms(int d, const SearchBudget& budget = {});

}  // namespace sharpmap
