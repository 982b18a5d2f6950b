#pragma once

#include <variant>
#include <vector>

#include "plectic/rational.hpp"

namespace plectic {

using Matrix = std::vector<std::vector<Rational>>;

struct LinearSystem {
  Matrix matrix;  // rows x cols
  std::vector<Rational> rhs;
};

struct LinearSolution {
  std::vector<Rational> particular;         // free variables set to zero
  std::vector<std::vector<Rational>> nullspace;
};

// y with y^T A = 0 and y^T b != 0.
struct Inconsistent {
  std::vector<Rational> certificate;
};

using SolveResult = std::variant<LinearSolution, Inconsistent>;

// Exact Gauss-Jordan elimination; pivots are taken column by column, left to right,
// using the first nonzero row.
SolveResult solve_linear(const LinearSystem& system);

int matrix_rank(const Matrix& m, int cols);
std::vector<std::vector<Rational>> nullspace(const Matrix& m, int cols);
std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& x);

}  // namespace plectic
