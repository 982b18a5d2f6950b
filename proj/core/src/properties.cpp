#include "plectic/properties.hpp"

#include <algorithm>
#include <set>
#include <variant>

#include "plectic/error.hpp"
#include "plectic/expression.hpp"
#include "plectic/invariant_poly.hpp"
#include "plectic/observables.hpp"
#include "plectic/samplers.hpp"

namespace plectic {

namespace {

using Witness = std::optional<std::string>;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string join(std::span<const int> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

Witness koszul_composition(Rng& rng) {
  const int n = rng.uniform(1, 6);
  std::vector<int> deg(n);
  for (auto& d : deg) d = rng.uniform(-3, 3);
  auto sigma = random_permutation(n, rng);
  auto tau = random_permutation(n, rng);
  const int lhs = koszul_sign(tau.then(sigma), deg);
  const int rhs = koszul_sign(sigma, permute(deg, tau)) * koszul_sign(tau, deg);
  if (lhs == rhs && tau.then(sigma).sign() == tau.sign() * sigma.sign()) return std::nullopt;
  return "sigma=" + join(sigma.images()) + " tau=" + join(tau.images()) + " degrees=" + join(deg);
}

Witness unshuffle_count(Rng& rng) {
  const int blocks = rng.uniform(2, 3);
  std::vector<int> sizes;
  int total = 0;
  for (int b = 0; b < blocks; ++b) {
    sizes.push_back(rng.uniform(1, std::max(1, (8 - total) - (blocks - b - 1))));
    total += sizes.back();
  }
  if (total > 8) return std::nullopt;
  Rational expected = factorial(total);
  for (int s : sizes) expected /= factorial(s);
  auto shuffles = unshuffles(sizes);
  std::set<Permutation> distinct(shuffles.begin(), shuffles.end());
  if (Rational(static_cast<long>(shuffles.size())) != expected || distinct.size() != shuffles.size())
    return "blocks " + join(sizes) + ": " + std::to_string(shuffles.size()) + " unshuffles";
  for (const auto& p : shuffles) {
    int pos = 1;
    for (int s : sizes) {
      for (int t = 1; t < s; ++t)
        if (p(pos + t - 1) > p(pos + t)) return "blocks " + join(sizes) + ": " + join(p.images()) + " not ascending";
      pos += s;
    }
  }
  return std::nullopt;
}

Witness alt_idempotent(Rng& rng) {
  const int k = rng.uniform(1, 5);
  int dim = rng.uniform(1, 4);
  auto entries = [&] {
    int e = 1;
    for (int i = 0; i < k; ++i) e *= dim;
    return e;
  };
  while (dim > 1 && entries() > 256) --dim;
  auto t = random_table(dim, k, rng);
  auto a = alt_k(t);
  if (alt_k(a) != a) return "dim " + std::to_string(dim) + " arity " + std::to_string(k) + ": alt not idempotent";
  if (k >= 2) {
    std::string bad;
    a.for_each_index([&](std::span<const int> idx) {
      std::vector<int> swapped(idx.begin(), idx.end());
      std::swap(swapped[0], swapped[1]);
      if (bad.empty() && a.at(swapped) != -a.at(idx)) bad = join(idx);
    });
    if (!bad.empty()) return "alt output not skew at " + bad;
  }
  return std::nullopt;
}

// Rank by elimination on the transpose, pivoting on the last nonzero entry;
// deliberately unrelated to the solver's pivot order.
int rank_by_columns(const Matrix& m, int cols) {
  Matrix t(cols, std::vector<Rational>(m.size(), Rational(0)));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int j = 0; j < cols; ++j) t[j][i] = m[i][j];
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  std::vector<bool> used(cols, false);
  for (int c = rows - 1; c >= 0; --c) {
    int pivot = -1;
    for (int r = cols - 1; r >= 0; --r)
      if (!used[r] && !is_zero(t[r][c])) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    used[pivot] = true;
    ++rank;
    for (int r = 0; r < cols; ++r) {
      if (r == pivot || is_zero(t[r][c])) continue;
      const Rational f = t[r][c] / t[pivot][c];
      for (int cc = 0; cc < rows; ++cc) t[r][cc] -= f * t[pivot][cc];
    }
  }
  return rank;
}

Witness solve_linear_soundness(Rng& rng) {
  const int rows = rng.uniform(1, 5), cols = rng.uniform(1, 5);
  Matrix a = random_matrix(rows, cols, rng);
  std::vector<Rational> b(rows, Rational(0));
  if (rng.coin()) {
    std::vector<Rational> x(cols);
    for (auto& v : x) v = rng.rational();
    b = mat_vec(a, x);
  } else {
    for (auto& v : b) v = rng.rational();
  }
  Matrix augmented = a;
  for (int i = 0; i < rows; ++i) augmented[i].push_back(b[i]);
  const int rank_a = rank_by_columns(a, cols);
  const int rank_ab = rank_by_columns(augmented, cols + 1);
  const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  auto result = solve_linear({a, b});
  if (const auto* sol = std::get_if<LinearSolution>(&result)) {
    if (mat_vec(a, sol->particular) != b) return shape + ": Ax != b";
    const std::vector<Rational> zero(rows, Rational(0));
    for (const auto& v : sol->nullspace)
      if (mat_vec(a, v) != zero) return shape + ": nullspace vector not in kernel";
    if (static_cast<int>(sol->nullspace.size()) != cols - rank_a) return shape + ": nullspace dimension";
    if (rank_a != rank_ab) return shape + ": solution returned for an inconsistent system";
    return std::nullopt;
  }
  const auto& y = std::get<Inconsistent>(result).certificate;
  Rational yb = 0;
  for (int i = 0; i < rows; ++i) yb += y[i] * b[i];
  for (int j = 0; j < cols; ++j) {
    Rational s = 0;
    for (int i = 0; i < rows; ++i) s += y[i] * a[i][j];
    if (!is_zero(s)) return shape + ": certificate not in the left kernel";
  }
  if (is_zero(yb)) return shape + ": certificate does not separate b";
  if (rank_a == rank_ab) return shape + ": Inconsistent for a consistent system";
  return std::nullopt;
}

Chart random_chart(Rng& rng, int lo, int hi) { return Chart::numbered("x", rng.uniform(lo, hi)); }

Witness d_squared(Rng& rng) {
  Chart c = random_chart(rng, 1, 5);
  auto a = random_form(c, rng.uniform(0, std::min(4, c.size())), 4, rng);
  auto dd = exterior_d(exterior_d(a));
  if (dd.is_zero()) return std::nullopt;
  return "a = " + to_string(a) + ", dd a = " + to_string(dd);
}

Witness leibniz(Rng& rng) {
  Chart c = random_chart(rng, 1, 5);
  const int p = rng.uniform(0, c.size());
  const int q = rng.uniform(0, c.size() - p);
  auto a = random_form(c, p, 3, rng);
  auto b = random_form(c, q, 3, rng);
  auto lhs = exterior_d(wedge(a, b));
  auto rhs = wedge(exterior_d(a), b) + Rational(p % 2 ? -1 : 1) * wedge(a, exterior_d(b));
  if (lhs == rhs) return std::nullopt;
  return "a = " + to_string(a) + ", b = " + to_string(b);
}

Witness commutator(Rng& rng) {
  const int du = rng.uniform(1, 3);
  const int dv = rng.uniform(1, 4 - du);
  Chart c = Chart::numbered("x", rng.uniform(std::max(3, du + dv), 5));
  auto u = random_field(c, du, 2, rng, 2);
  auto v = random_field(c, dv, 2, rng, 2);
  auto alpha = random_form(c, rng.uniform(du + dv, c.size()), 2, rng);
  auto lhs = interior(schouten(u, v), alpha);
  const Rational sign = ((du - 1) * dv) % 2 ? -1 : 1;
  auto rhs = sign * lie_derivative(u, interior(v, alpha)) - interior(v, lie_derivative(u, alpha));
  if (lhs == rhs) return std::nullopt;
  return "u = " + to_string(u) + ", v = " + to_string(v) + ", alpha = " + to_string(alpha);
}

Witness homotopy_formula(Rng& rng) {
  Chart c = random_chart(rng, 1, 5);
  auto a = random_form(c, rng.uniform(1, c.size()), 4, rng);
  PolyForm sum = exterior_d(poincare_homotopy(a));
  if (a.degree() < c.size()) sum += poincare_homotopy(exterior_d(a));
  if (sum == a) return std::nullopt;
  return "a = " + to_string(a) + ", (dK + Kd) a = " + to_string(sum);
}

Witness iota_iota(Rng& rng) {
  Chart c = random_chart(rng, 2, 5);
  auto v = random_field(c, 1, 3, rng);
  auto a = random_form(c, rng.uniform(2, c.size()), 3, rng);
  auto r = interior(v, interior(v, a));
  if (r.is_zero()) return std::nullopt;
  return "v = " + to_string(v) + ", a = " + to_string(a);
}

const std::vector<LieAlgebra>& small_algebras() {
  static const std::vector<LieAlgebra> pool{
      su2_algebra(),
      so_algebra(3),
      heisenberg_algebra(),
      solvable4_algebra(),
      LieAlgebra({"a", "b"}, std::vector<BracketEntry>{{0, 1, LieVector{0, 1}}}),
      direct_sum(LieAlgebra({"a", "b"}, std::vector<BracketEntry>{{0, 1, LieVector{0, 1}}}), abelian_algebra(2)),
      abelian_algebra(3),
      abelian_algebra(4),
  };
  return pool;
}

Witness ce_squared(Rng& rng) {
  const auto& pool = small_algebras();
  const auto& g = pool[rng.uniform(0, static_cast<int>(pool.size()) - 1)];
  const int k = rng.uniform(0, g.dim());
  auto c = random_cochain(g.dim(), k, rng);
  auto dd = ce_differential(g, ce_differential(g, c));
  if (dd.is_zero()) return std::nullopt;
  return "dim " + std::to_string(g.dim()) + ", degree " + std::to_string(k) + ": " + to_string(c, g);
}

Witness perfect_decomposition(Rng& rng) {
  static const std::vector<LieAlgebra> pool{su2_algebra(), so_algebra(3), so_algebra(4), su_algebra(2)};
  const auto& g = pool[rng.uniform(0, static_cast<int>(pool.size()) - 1)];
  LieVector x(g.dim());
  for (auto& v : x) v = rng.coin() ? rng.rational() : Rational(0);
  LieVector sum(g.dim(), Rational(0));
  for (const auto& [a, b] : solve_perfect_decomposition(g, x)) add_scaled(sum, Rational(1), g.bracket(a, b));
  if (sum == x) return std::nullopt;
  return "x = " + to_string(x);
}

// Hamiltonian field of h for dx1^dx2 + dx3^dx4.
PolyMultiVec symplectic_field(const Chart& c, const MultiPoly& h) {
  PolyMultiVec v(c, 1);
  v += PolyMultiVec::basis(c, std::vector<int>{0}, -h.derivative(1));
  v += PolyMultiVec::basis(c, std::vector<int>{1}, h.derivative(0));
  v += PolyMultiVec::basis(c, std::vector<int>{2}, -h.derivative(3));
  v += PolyMultiVec::basis(c, std::vector<int>{3}, h.derivative(2));
  return v;
}

Witness bracket_identity(Rng& rng) {
  PolyForm omega;
  PolyMultiVec v1, v2;
  if (rng.coin()) {
    Chart c = random_chart(rng, 3, 4);
    omega = volume_form(c);
    v1 = random_divergence_free(c, 2, rng);
    v2 = random_divergence_free(c, 2, rng);
  } else {
    Chart c = Chart::numbered("x", 4);
    omega = PolyForm::basis(c, {0, 1}) + PolyForm::basis(c, {2, 3});
    v1 = symplectic_field(c, random_poly(4, 3, 3, rng));
    v2 = symplectic_field(c, random_poly(4, 3, 3, rng));
  }
  auto r = bracket_identity_residual(v1, v2, omega);
  if (r.is_zero()) return std::nullopt;
  return "omega = " + to_string(omega) + ", v1 = " + to_string(v1) + ", v2 = " + to_string(v2);
}

Witness big_identity(Rng& rng) {
  const int m = rng.uniform(2, 4);
  Chart c = Chart::numbered("x", 4);
  std::vector<PolyMultiVec> vs;
  for (int i = 0; i < m; ++i) vs.push_back(random_divergence_free(c, 2, rng));
  auto r = big_identity_residual(vs, volume_form(c));
  if (r.is_zero()) return std::nullopt;
  return "m = " + std::to_string(m) + ", residual " + to_string(r);
}

Witness parse_roundtrip(Rng& rng) {
  Chart c = random_chart(rng, 1, 5);
  switch (rng.uniform(0, 2)) {
    case 0: {
      auto p = random_poly(c.size(), 4, 4, rng);
      const auto text = to_string(p, c);
      if (parse_polynomial(text, c) == p) return std::nullopt;
      return "polynomial " + text;
    }
    case 1: {
      auto a = random_form(c, rng.uniform(0, c.size()), 3, rng);
      const auto text = to_string(a);
      if (parse_form(text, c) == a) return std::nullopt;
      return "form " + text;
    }
    default: {
      auto v = random_field(c, rng.uniform(1, c.size()), 3, rng);
      const auto text = to_string(v);
      if (parse_field(text, c) == v) return std::nullopt;
      return "field " + text;
    }
  }
}

}  // namespace

const std::vector<Property>& property_catalog() {
  static const std::vector<Property> catalog{
      {"koszul-composition", koszul_composition},
      {"unshuffle-count", unshuffle_count},
      {"alt-idempotent", alt_idempotent},
      {"solve-linear", solve_linear_soundness},
      {"d-squared", d_squared},
      {"leibniz", leibniz},
      {"commutator", commutator},
      {"homotopy-formula", homotopy_formula},
      {"iota-iota", iota_iota},
      {"ce-squared", ce_squared},
      {"perfect-decomposition", perfect_decomposition},
      {"bracket-identity", bracket_identity},
      {"big-identity", big_identity},
      {"parse-roundtrip", parse_roundtrip},
  };
  return catalog;
}

const Property& find_property(const std::string& name) {
  for (const auto& p : property_catalog())
    if (p.name == name) return p;
  throw Error(ErrorKind::InvalidInput, "unknown property '" + name + "'");
}

PropertyResult run_property(const Property& p, std::uint64_t seed, int instances) {
  PropertyResult out{p.name, 0, 0, {}};
  Rng rng(seed ^ fnv1a(p.name));
  for (int i = 0; i < instances; ++i) {
    ++out.instances;
    Witness w;
    try {
      w = p.instance(rng);
    } catch (const Error& e) {
      w = std::string("error: ") + e.what();
    }
    if (w) {
      if (out.failures++ == 0) out.first_witness = "instance " + std::to_string(i) + ": " + *w;
    }
  }
  return out;
}

std::vector<PropertyResult> run_properties(const std::vector<std::string>& names, std::uint64_t seed, int instances) {
  std::vector<PropertyResult> out;
  for (const auto& n : names) out.push_back(run_property(find_property(n), seed, instances));
  return out;
}

}  // namespace plectic
