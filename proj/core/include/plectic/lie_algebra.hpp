#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "plectic/rational.hpp"

namespace plectic {

// Coordinates of a Lie algebra element in the fixed basis.
using LieVector = std::vector<Rational>;

LieVector basis_vector(int dim, int i);
bool is_zero(const LieVector& v);

struct BracketEntry {
  int i;
  int j;
  LieVector value;  // [e_i, e_j]
};

// Structure constants before validation; used to report Jacobi failures.
struct StructureConstants {
  int dim = 0;
  std::vector<LieVector> table;  // table[i * dim + j] = [e_i, e_j]

  static StructureConstants from_brackets(int dim, const std::vector<BracketEntry>& entries);
  std::optional<std::array<int, 2>> antisymmetry_violation() const;
  std::optional<std::array<int, 3>> jacobi_violation() const;
};

class LieAlgebra {
 public:
  LieAlgebra() = default;
  // Throws InvalidInput if antisymmetry or the Jacobi identity fails.
  LieAlgebra(std::vector<std::string> names, StructureConstants constants);
  LieAlgebra(std::vector<std::string> names, const std::vector<BracketEntry>& entries);

  int dim() const { return constants_.dim; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  const LieVector& bracket_basis(int i, int j) const { return constants_.table[i * dim() + j]; }
  LieVector bracket(const LieVector& x, const LieVector& y) const;
  bool is_abelian() const;
  const StructureConstants& constants() const { return constants_; }

 private:
  std::vector<std::string> names_;
  StructureConstants constants_;
};

LieAlgebra abelian_algebra(int dim);
// [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2.
LieAlgebra su2_algebra();
// Basis e_ij (i<j), lexicographic, with e_ij = -E_ij + E_ji.
LieAlgebra so_algebra(int n);
std::vector<std::vector<std::vector<Rational>>> so_matrices(int n);
// [e1,e2]=e3.
LieAlgebra heisenberg_algebra();
// Span of E11, E12, E22, E33 in gl(3): 4-dimensional and solvable.
LieAlgebra solvable4_algebra();
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace plectic
