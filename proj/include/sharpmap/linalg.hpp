#pragma once

#include <vector>

#include "sharpmap/rational.hpp"

namespace sharpmap {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major

// In-place reduced row echelon form; returns the pivot column of each pivot
// row (rows below the returned count are zero afterwards).
std::vector<int> rref(Mat& a);

int matrix_rank(Mat a);

enum class SolveStatus { Inconsistent, Unique, Underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  // Unique: the solution. Underdetermined: one particular solution with all
  // free variables set to zero.
  Vec x;
};

// Exact solve of A x = b (A is rows x cols, b has rows entries).
SolveResult solve_linear(const Mat& a, const Vec& b);

}  // namespace sharpmap
