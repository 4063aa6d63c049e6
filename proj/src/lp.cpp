#include "sharpmap/lp.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace sharpmap {

std::string lp_status_name(LPStatus status) {
  switch (status) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
  }
  throw std::logic_error("lp_status_name: unknown status");
}

namespace {

// Dense simplex tableau over exact rationals. Column count stays fixed;
// `basis[i]` names the variable basic in row i. `r` holds reduced costs
// c_j - c_B B^{-1} A_j, `obj` the current objective value c_B B^{-1} b.
struct Tableau {
  Mat T;
  Vec b;
  Vec r;
  Rational obj;
  std::vector<int> basis;

  int rows() const { return static_cast<int>(T.size()); }
  int cols() const { return static_cast<int>(r.size()); }

  void pivot(int prow, int pcol) {
    const Rational piv = T[prow][pcol];
    obj += r[pcol] * (b[prow] / piv);
    const Rational inv = piv.reciprocal();
    for (auto& v : T[prow]) v *= inv;
    b[prow] *= inv;
    for (int i = 0; i < rows(); ++i) {
      if (i == prow) continue;
      const Rational f = T[i][pcol];
      if (f.is_zero()) continue;
      for (int j = 0; j < cols(); ++j)
        if (!T[prow][j].is_zero()) T[i][j] -= f * T[prow][j];
      b[i] -= f * b[prow];
    }
    const Rational fr = r[pcol];
    if (!fr.is_zero())
      for (int j = 0; j < cols(); ++j)
        if (!T[prow][j].is_zero()) r[j] -= fr * T[prow][j];
    basis[prow] = pcol;
  }

  // Bland's rule: entering = smallest column index with negative reduced
  // cost; leaving = smallest ratio, ties broken by smallest basic variable.
  // Returns false when unbounded.
  bool run() {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (r[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows(); ++i) {
        if (T[i][enter].sign() <= 0) continue;
        const Rational ratio = b[i] / T[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

struct Core {
  LPStatus status = LPStatus::Infeasible;
  Tableau t;                       // final phase-2 tableau (Optimal only)
  std::vector<int> work_to_orig;   // working column -> system column
  int nw = 0;                      // working column count
};

Vec extract_point(const Core& core, const Tableau& t, const LinearSystem& sys,
                  const std::map<int, Rational>& pinned) {
  Vec point(sys.cols(), Rational(0));
  for (int i = 0; i < t.rows(); ++i)
    point[core.work_to_orig[t.basis[i]]] = t.b[i];
  for (const auto& [j, v] : pinned) point[j] = v;
  return point;
}

Core solve_core(const LinearSystem& sys, const Vec& objective,
                const std::map<int, Rational>& pinned) {
  if (static_cast<int>(objective.size()) != sys.cols())
    throw std::invalid_argument("lp: objective length != column count");
  for (const auto& [j, v] : pinned) {
    if (j < 0 || j >= sys.cols())
      throw std::invalid_argument("lp: pinned column index out of range");
    if (v.sign() < 0)
      throw std::invalid_argument("lp: pinned values must be nonnegative");
  }

  Core core;
  for (int j = 0; j < sys.cols(); ++j)
    if (!pinned.count(j)) core.work_to_orig.push_back(j);
  core.nw = static_cast<int>(core.work_to_orig.size());

  // substitute pins into the right-hand side
  Vec b = sys.rhs;
  for (const auto& [j, v] : pinned) {
    if (v.is_zero()) continue;
    for (int i = 0; i < sys.rows(); ++i) b[i] -= sys.matrix[i][j] * v;
  }

  // exact row reduction: drops redundant rows, detects inconsistency
  Mat aug(sys.rows(), Vec(core.nw + 1));
  for (int i = 0; i < sys.rows(); ++i) {
    for (int j = 0; j < core.nw; ++j) aug[i][j] = sys.matrix[i][core.work_to_orig[j]];
    aug[i][core.nw] = b[i];
  }
  const std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == core.nw) return core;  // 0 = nonzero
  const int m = static_cast<int>(pivots.size());

  Tableau t;
  t.T.resize(m);
  t.b.resize(m);
  for (int i = 0; i < m; ++i) {
    t.T[i].assign(aug[i].begin(), aug[i].begin() + core.nw);
    t.b[i] = aug[i][core.nw];
    if (t.b[i].sign() < 0) {
      for (auto& v : t.T[i]) v = -v;
      t.b[i] = -t.b[i];
    }
  }

  if (m > 0) {
    // phase 1: artificial basis, minimize the artificial sum
    t.basis.resize(m);
    for (int i = 0; i < m; ++i) {
      t.T[i].resize(core.nw + m, Rational(0));
      t.T[i][core.nw + i] = Rational(1);
      t.basis[i] = core.nw + i;
    }
    t.r.assign(core.nw + m, Rational(0));
    t.obj = Rational(0);
    for (int i = 0; i < m; ++i) {
      t.obj += t.b[i];
      for (int j = 0; j < core.nw; ++j) t.r[j] -= t.T[i][j];
    }
    t.run();  // phase 1 is always bounded below by 0
    if (!t.obj.is_zero()) return core;

    // drive artificials out of the basis (pivot value 0, feasibility kept)
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < core.nw) continue;
      int col = -1;
      for (int j = 0; j < core.nw; ++j) {
        if (!t.T[i][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col < 0)
        throw std::logic_error("lp: redundant row survived row reduction");
      t.pivot(i, col);
    }

    // phase 2: drop artificial columns, install the real objective
    for (int i = 0; i < m; ++i) t.T[i].resize(core.nw);
    t.r.assign(core.nw, Rational(0));
    t.obj = Rational(0);
    for (int j = 0; j < core.nw; ++j) t.r[j] = objective[core.work_to_orig[j]];
    for (int i = 0; i < m; ++i) {
      const Rational cb = objective[core.work_to_orig[t.basis[i]]];
      if (cb.is_zero()) continue;
      t.obj += cb * t.b[i];
      for (int j = 0; j < core.nw; ++j)
        if (!t.T[i][j].is_zero()) t.r[j] -= cb * t.T[i][j];
    }
    if (!t.run()) {
      core.status = LPStatus::Unbounded;
      return core;
    }
  } else {
    // no binding constraints: origin of the working variables is optimal
    // unless some objective entry is negative (then unbounded)
    t.r.assign(core.nw, Rational(0));
    for (int j = 0; j < core.nw; ++j) {
      t.r[j] = objective[core.work_to_orig[j]];
      if (t.r[j].sign() < 0) {
        core.status = LPStatus::Unbounded;
        return core;
      }
    }
  }

  core.status = LPStatus::Optimal;
  core.t = std::move(t);
  return core;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

}  // namespace

LPResult lp_feasible(const LinearSystem& sys,
                     const std::map<int, Rational>& pinned) {
  LPProblem prob;
  prob.system = &sys;
  prob.objective.assign(sys.cols(), Rational(0));
  prob.pinned = pinned;
  return lp_minimize(prob);
}

LPResult lp_minimize(const LPProblem& prob) {
  if (prob.system == nullptr)
    throw std::invalid_argument("lp_minimize: missing system");
  const LinearSystem& sys = *prob.system;
  const Core core = solve_core(sys, prob.objective, prob.pinned);
  LPResult res;
  res.status = core.status;
  if (core.status != LPStatus::Optimal) return res;
  res.point = extract_point(core, core.t, sys, prob.pinned);
  res.value = dot(prob.objective, res.point);
  return res;
}

std::vector<LPResult> enumerate_vertex_optima(const LPProblem& prob) {
  if (prob.system == nullptr)
    throw std::invalid_argument("enumerate_vertex_optima: missing system");
  const LinearSystem& sys = *prob.system;
  const Core core = solve_core(sys, prob.objective, prob.pinned);
  std::vector<LPResult> out;
  if (core.status != LPStatus::Optimal) return out;

  std::set<Vec> points;
  if (core.t.rows() == 0) {
    // the origin of the working variables is the unique vertex
    Tableau t = core.t;
    points.insert(extract_point(core, t, sys, prob.pinned));
  } else {
    std::set<std::vector<int>> seen;
    std::deque<Tableau> queue;
    auto key = [](const Tableau& t) {
      std::vector<int> k = t.basis;
      std::sort(k.begin(), k.end());
      return k;
    };
    seen.insert(key(core.t));
    queue.push_back(core.t);
    while (!queue.empty()) {
      Tableau t = std::move(queue.front());
      queue.pop_front();
      points.insert(extract_point(core, t, sys, prob.pinned));
      std::vector<bool> basic(t.cols(), false);
      for (int v : t.basis) basic[v] = true;
      for (int j = 0; j < t.cols(); ++j) {
        if (basic[j] || !t.r[j].is_zero()) continue;
        // find the exact minimum ratio; each argmin row is one adjacent basis
        Rational best;
        bool has = false;
        for (int i = 0; i < t.rows(); ++i) {
          if (t.T[i][j].sign() <= 0) continue;
          const Rational ratio = t.b[i] / t.T[i][j];
          if (!has || ratio < best) {
            best = ratio;
            has = true;
          }
        }
        if (!has) continue;  // unbounded edge of the optimal face
        for (int i = 0; i < t.rows(); ++i) {
          if (t.T[i][j].sign() <= 0) continue;
          if (t.b[i] / t.T[i][j] != best) continue;
          Tableau child = t;
          child.pivot(i, j);
          auto k = key(child);
          if (seen.insert(k).second) queue.push_back(std::move(child));
        }
      }
    }
  }

  const Rational opt = dot(prob.objective,
                           *points.begin());  // all points share the optimum
  for (const Vec& p : points) {
    LPResult r;
    r.status = LPStatus::Optimal;
    r.point = p;
    r.value = opt;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace sharpmap
