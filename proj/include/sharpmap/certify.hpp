#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sharpmap/polynomial.hpp"

namespace sharpmap {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // exact values compared, or "not applicable"
};

struct Certificate {
  Polynomial subject;
  std::vector<CheckResult> checks;
  bool verdict = false;  // all checks pass
};

// Self-contained sharpness certificate for a candidate in n variables:
// hyperplane identity, strict positivity, degree, term count against the
// predicted minimum, the degree bound, the top-term normalization
// (two variables, odd degree, minimal term count only), and the sink
// count bound (two variables only).  Failures are recorded, never thrown.
Certificate verify_sharp(const Polynomial& p, int n);

// Necessary condition on target dimensions: N is inadmissible exactly in
// the proven gaps 1 < N < n and n < N < 2n-2.
bool gap_admissible(int n, int N);

// T(n) = n^2 - 2n + 2: every N >= T(n) must be representable.
int census_threshold(int n);

// For each N <= max_N, a generated witness with exactly N terms equal to 1
// on the hyperplane (built by the W/V constructions from x_1+...+x_n), or
// absent when the construction reaches no such N.
std::map<int, std::optional<Polynomial>> target_minimal_census(int n,
                                                               int max_N);

}  // namespace sharpmap
