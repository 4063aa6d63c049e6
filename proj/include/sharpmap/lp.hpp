#pragma once

#include <map>
#include <string>
#include <vector>

#include "sharpmap/linalg.hpp"
#include "sharpmap/system.hpp"

namespace sharpmap {

enum class LPStatus { Optimal, Infeasible, Unbounded };

std::string lp_status_name(LPStatus status);

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Vec point;       // dense over the system's columns (pins substituted back)
  Rational value;  // objective value when Optimal
};

struct LPProblem {
  const LinearSystem* system = nullptr;
  Vec objective;                          // minimized; length = cols()
  std::map<int, Rational> pinned;         // column index -> fixed nonnegative value
};

// Phase-1 feasibility of A u = b, u >= 0 (optionally with pins); when
// feasible, returns an exact basic feasible point.
LPResult lp_feasible(const LinearSystem& sys,
                     const std::map<int, Rational>& pinned = {});

// Exact two-phase simplex with Bland's rule (deterministic, cycle-free).
LPResult lp_minimize(const LPProblem& prob);

// All basic feasible solutions attaining the optimum: pivot search across
// zero-reduced-cost columns on the optimal face, deduplicated by point,
// sorted for deterministic output. Empty when infeasible.
std::vector<LPResult> enumerate_vertex_optima(const LPProblem& prob);

}  // namespace sharpmap
