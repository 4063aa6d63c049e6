#include "sharpmap/search.hpp"

#include <algorithm>
#include <climits>
#include <thread>
#include <utility>

#include "sharpmap/linalg.hpp"

namespace sharpmap {

namespace {

mpz_class combination_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// k-subsets of {0..n-1} in lexicographic order
std::vector<int> unrank_combination(int n, int k, mpz_class rank) {
  std::vector<int> out;
  out.reserve(k);
  int a = 0;
  for (int pos = 0; pos < k; ++pos) {
    while (true) {
      const mpz_class block = combination_count(n - 1 - a, k - 1 - pos);
      if (rank < block) break;
      rank -= block;
      ++a;
    }
    out.push_back(a);
    ++a;
  }
  return out;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool solution_strictly_positive(const Vec& x) {
  for (const Rational& v : x)
    if (v.sign() <= 0) return false;
  return true;
}

SupportSolution make_solution(const LinearSystem& sys,
                              const std::vector<int>& support, const Vec& x) {
  SupportSolution s;
  s.support = support;
  s.l0 = static_cast<int>(support.size());
  s.l1 = Rational(0);
  Vec dense(sys.cols(), Rational(0));
  for (std::size_t i = 0; i < support.size(); ++i) {
    s.values[support[i]] = x[i];
    s.l1 += x[i];
    dense[support[i]] = x[i];
  }
  s.polynomial = sys.reassemble(dense);
  return s;
}

struct LevelOut {
  std::vector<SupportSolution> witnesses;
  long long pruned = 0;
  long long nonisolated = 0;
};

// Examine one contiguous (in lexicographic rank) batch of size-k supports.
void process_range(const LinearSystem& sys, int k,
                   const std::vector<bool>& is_distinguished, bool constrained,
                   const mpz_class& start_rank, long long count,
                   LevelOut& out) {
  if (count <= 0) return;
  std::vector<int> combo = unrank_combination(sys.cols(), k, start_rank);
  Mat sub(sys.rows(), Vec(k));
  for (long long step = 0; step < count; ++step) {
    bool hits = !constrained;
    if (constrained)
      for (int j : combo)
        if (is_distinguished[j]) {
          hits = true;
          break;
        }
    if (!hits) {
      ++out.pruned;
    } else {
      for (int i = 0; i < sys.rows(); ++i)
        for (int j = 0; j < k; ++j) sub[i][j] = sys.matrix[i][combo[j]];
      const SolveResult sol = solve_linear(sub, sys.rhs);
      if (sol.status == SolveStatus::Unique) {
        if (solution_strictly_positive(sol.x))
          out.witnesses.push_back(make_solution(sys, combo, sol.x));
      } else if (sol.status == SolveStatus::Underdetermined) {
        // A consistent support with dependent columns can never carry the
        // first strictly positive solution: moving along a null direction
        // that keeps distinguished coordinates nonincreasing reaches a
        // smaller feasible support, which an earlier level already covered.
        ++out.nonisolated;
      }
    }
    if (step + 1 < count) next_combination(combo, sys.cols());
  }
}

bool witness_less(const SupportSolution& a, const SupportSolution& b) {
  const int c = Polynomial::compare(a.polynomial, b.polynomial);
  if (c != 0) return c < 0;
  return a.support < b.support;
}

long long saturating_ll(const mpz_class& v) {
  if (!v.fits_slong_p()) return LLONG_MAX;
  const long x = v.get_si();
  return static_cast<long long>(x);
}

}  // namespace

SearchReport min_l0(const LinearSystem& sys, bool degree_constrained,
                    bool enumerate_all, const SearchBudget& budget) {
  if (budget.workers < 1)
    throw std::invalid_argument("min_l0: workers must be at least 1");
  SearchReport report;
  std::vector<bool> is_distinguished(sys.cols(), false);
  for (int j : sys.distinguished) is_distinguished[j] = true;

  const int kmax = budget.max_support < 0
                       ? sys.cols()
                       : std::min(sys.cols(), budget.max_support);
  mpz_class nodes_total = 0;
  for (int k = 0; k <= kmax; ++k) {
    const mpz_class level = combination_count(sys.cols(), k);
    if (budget.max_combinations >= 0 &&
        nodes_total + level > static_cast<long>(budget.max_combinations)) {
      report.budget_exhausted = true;
      break;
    }
    nodes_total += level;

    int workers = budget.workers;
    if (mpz_class(workers * 16) > level) workers = 1;
    std::vector<LevelOut> parts(workers);
    if (workers == 1) {
      process_range(sys, k, is_distinguished, degree_constrained, 0,
                    saturating_ll(level), parts[0]);
    } else {
      std::vector<std::thread> threads;
      std::vector<mpz_class> bounds(workers + 1);
      for (int t = 0; t <= workers; ++t) bounds[t] = (level * t) / workers;
      for (int t = 0; t < workers; ++t)
        threads.emplace_back([&, t] {
          process_range(sys, k, is_distinguished, degree_constrained,
                        bounds[t], saturating_ll(bounds[t + 1] - bounds[t]),
                        parts[t]);
        });
      for (auto& th : threads) th.join();
    }

    std::vector<SupportSolution> found;
    for (LevelOut& p : parts) {
      report.prunes_by_certificate += p.pruned;
      report.nonisolated_supports += p.nonisolated;
      for (SupportSolution& w : p.witnesses) found.push_back(std::move(w));
    }
    if (!found.empty()) {
      std::sort(found.begin(), found.end(), witness_less);
      report.feasible = true;
      report.min_l0 = k;
      if (enumerate_all)
        report.witnesses = std::move(found);
      else
        report.witnesses.push_back(std::move(found.front()));
      break;
    }
  }
  if (!report.feasible && !report.budget_exhausted && kmax < sys.cols())
    report.budget_exhausted = true;  // the support-size cap cut the search
  report.nodes_explored = saturating_ll(nodes_total);
  return report;
}

int sharp_bound(int n, int d) {
  if (n < 2 || d < 1)
    throw std::invalid_argument("sharp_bound: need n >= 2 and d >= 1");
  if (n == 2) return (d % 2 == 1) ? (d + 3) / 2 : d / 2 + 2;
  return d * (n - 1) + 1;
}

std::vector<Polynomial> uniqueness_test(int d, const SearchBudget& budget) {
  if (d < 1 || d % 2 == 0)
    throw std::invalid_argument("uniqueness_test: d must be a positive odd integer");
  const LinearSystem full = build_homogenized(2, d);
  const LinearSystem reduced = reduce_support(full);
  const SearchReport report = min_l0(reduced, false, true, budget);
  if (report.budget_exhausted)
    throw BudgetExceeded("uniqueness_test: search budget exhausted before the minimum was certain");
  std::vector<Polynomial> out;
  out.reserve(report.witnesses.size());
  for (const SupportSolution& w : report.witnesses) out.push_back(w.polynomial);
  return out;
}

SymmetricReport symmetric_min_terms(int d, const SearchBudget& budget) {
  const LinearSystem sys = build_symmetric(d);
  SymmetricReport report;
  const int cols = sys.cols();
  std::vector<int> weight(cols);
  std::vector<bool> is_distinguished(cols, false);
  for (int j : sys.distinguished) is_distinguished[j] = true;
  int total_weight = 0;
  for (int j = 0; j < cols; ++j) {
    weight[j] = sys.columns[j][1] == 0 ? 1 : 2;
    total_weight += weight[j];
  }

  // ways[i][w] = subsets of columns i.. with total weight exactly w
  std::vector<std::vector<mpz_class>> ways(
      cols + 1, std::vector<mpz_class>(total_weight + 1, 0));
  ways[cols][0] = 1;
  for (int i = cols - 1; i >= 0; --i)
    for (int w = 0; w <= total_weight; ++w) {
      ways[i][w] = ways[i + 1][w];
      if (w >= weight[i]) ways[i][w] += ways[i + 1][w - weight[i]];
    }

  mpz_class nodes_total = 0;
  for (int w = 1; w <= total_weight; ++w) {
    const mpz_class level = ways[0][w];
    if (budget.max_combinations >= 0 &&
        nodes_total + level > static_cast<long>(budget.max_combinations)) {
      report.budget_exhausted = true;
      break;
    }
    nodes_total += level;

    std::vector<SupportSolution> found;
    std::vector<int> support;
    Mat sub;
    // enumerate supports of total weight w in lexicographic order
    auto dfs = [&](auto&& self, int idx, int remaining, bool hits) -> void {
      if (remaining == 0) {
        if (!hits) {
          ++report.prunes_by_certificate;
          return;
        }
        const int k = static_cast<int>(support.size());
        sub.assign(sys.rows(), Vec(k));
        for (int i = 0; i < sys.rows(); ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = sys.matrix[i][support[j]];
        const SolveResult sol = solve_linear(sub, sys.rhs);
        if (sol.status == SolveStatus::Unique &&
            solution_strictly_positive(sol.x))
          found.push_back(make_solution(sys, support, sol.x));
        return;
      }
      if (idx == cols || ways[idx][remaining] == 0) return;
      if (weight[idx] <= remaining) {
        support.push_back(idx);
        self(self, idx + 1, remaining - weight[idx],
             hits || is_distinguished[idx]);
        support.pop_back();
      }
      self(self, idx + 1, remaining, hits);
    };
    dfs(dfs, 0, w, false);

    if (!found.empty()) {
      std::sort(found.begin(), found.end(), witness_less);
      report.feasible = true;
      report.min_terms = w;
      report.witnesses = std::move(found);
      break;
    }
  }
  report.nodes_explored = saturating_ll(nodes_total);
  if (!report.feasible && report.budget_exhausted)
    throw BudgetExceeded("symmetric_min_terms: search budget exhausted before the minimum was certain");
  return report;
}

}  // namespace sharpmap
