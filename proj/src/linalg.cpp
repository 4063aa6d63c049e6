#include "sharpmap/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace sharpmap {

std::vector<int> rref(Mat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (!a[i][c].is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(a[r], a[pr]);
    const Rational inv = a[r][c].reciprocal();
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int matrix_rank(Mat a) { return static_cast<int>(rref(a).size()); }

SolveResult solve_linear(const Mat& a, const Vec& b) {
  const int rows = static_cast<int>(a.size());
  if (rows != static_cast<int>(b.size()))
    throw std::invalid_argument("solve_linear: row-count mismatch");
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());

  SolveResult res;
  if (rows == 0) {
    // no constraints: all-zero is a (free) solution
    res.status = cols == 0 ? SolveStatus::Unique : SolveStatus::Underdetermined;
    res.x.assign(cols, Rational(0));
    return res;
  }

  Mat aug(rows, Vec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  const std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) {
    res.status = SolveStatus::Inconsistent;
    return res;
  }
  res.x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) res.x[pivots[i]] = aug[i][cols];
  res.status = static_cast<int>(pivots.size()) == cols ? SolveStatus::Unique
                                                       : SolveStatus::Underdetermined;
  return res;
}

}  // namespace sharpmap
