#include "plectic/cochain.hpp"

#include "plectic/linear_solve.hpp"

namespace plectic {

std::optional<ScalarCochain> is_ce_coboundary(const LieAlgebra& g, const ScalarCochain& c) {
  const int k = c.degree();
  if (k < 1) throw Error(ErrorKind::InvalidInput, "coboundary test needs degree >= 1");
  if (!ce_differential(g, c).is_zero()) throw Error(ErrorKind::NotACocycle, "cochain is not closed");
  ScalarCochain zero_primitive(g.dim(), k - 1, Rational(0));
  if (c.is_zero()) return zero_primitive;
  auto rows = increasing_subsets(g.dim(), k);
  auto cols = increasing_subsets(g.dim(), k - 1);
  LinearSystem sys;
  sys.matrix.assign(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
  for (std::size_t col = 0; col < cols.size(); ++col) {
    ScalarCochain e(g.dim(), k - 1, Rational(0));
    e.set(make_index_set(cols[col]), Rational(1));
    ScalarCochain de = ce_differential(g, e);
    for (std::size_t row = 0; row < rows.size(); ++row) sys.matrix[row][col] = de.at(rows[row]);
  }
  for (const auto& r : rows) sys.rhs.push_back(c.at(r));
  auto result = solve_linear(sys);
  auto* sol = std::get_if<LinearSolution>(&result);
  if (!sol) return std::nullopt;
  ScalarCochain b(g.dim(), k - 1, Rational(0));
  for (std::size_t col = 0; col < cols.size(); ++col) b.set(make_index_set(cols[col]), sol->particular[col]);
  return b;
}

ScalarCochain evaluate_at(const FormCochain& f, std::span<const Rational> point) {
  ScalarCochain out(f.dim(), f.degree(), Rational(0));
  for (const auto& [s, v] : f.values()) {
    if (v.degree() != 0) throw Error(ErrorKind::DegreeError, "point evaluation needs function values");
    out.set(s, v.coefficient(0).evaluate(point));
  }
  return out;
}

std::string to_string(const ScalarCochain& c, const LieAlgebra& g) {
  std::string out;
  for (const auto& [s, v] : c.values()) {
    std::string key;
    for (int i : indices_of(s)) key += (key.empty() ? "" : ",") + g.name(i);
    out += (out.empty() ? "" : "; ") + std::string("(") + key + ")=" + to_string(v);
  }
  return out.empty() ? "0" : out;
}

}  // namespace plectic
