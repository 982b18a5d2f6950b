#include "plectic/linfty.hpp"

#include <numeric>

#include "plectic/error.hpp"

namespace plectic {

std::string GradedSpace::format(const Element& e) const {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (is_zero(e[i])) continue;
    if (!out.empty()) out += " + ";
    out += (e[i] == 1 ? std::string() : to_string(e[i]) + " ") + names[i];
  }
  return out.empty() ? "0" : out;
}

int graded_sort_sign(std::vector<int>& idx, std::span<const int> degrees) {
  int sign = 1;
  const std::size_t n = idx.size();
  for (std::size_t pass = 0; pass < n; ++pass)
    for (std::size_t i = 0; i + 1 < n - pass; ++i)
      if (idx[i] > idx[i + 1]) {
        const bool both_odd = (degrees[idx[i]] & 1) && (degrees[idx[i + 1]] & 1);
        if (!both_odd) sign = -sign;
        std::swap(idx[i], idx[i + 1]);
      }
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (idx[i] == idx[i + 1] && !(degrees[idx[i]] & 1)) return 0;
  return sign;
}

BracketTable::BracketTable(GradedSpace space, int n) : space_(std::move(space)), n_(n) {
  if (n_ < 1) throw Error(ErrorKind::InvalidInput, "a Lie n-algebra needs n >= 1");
  if (space_.degrees.size() != space_.names.size())
    throw Error(ErrorKind::SizeMismatch, "one degree per basis name is required");
  for (int d : space_.degrees)
    if (d > 0 || d < 1 - n_)
      throw Error(ErrorKind::DegreeError, "degree " + std::to_string(d) + " outside 1-n..0");
}

void BracketTable::set(std::vector<int> idx, const Element& value) {
  const int k = static_cast<int>(idx.size());
  if (k < 1 || k > n_ + 1) throw Error(ErrorKind::DegreeError, "bracket arity outside 1..n+1");
  if (static_cast<int>(value.size()) != dim()) throw Error(ErrorKind::SizeMismatch, "bracket value has wrong size");
  int total = 0;
  for (int i : idx) {
    if (i < 0 || i >= dim()) throw Error(ErrorKind::InvalidInput, "basis index out of range");
    total += degree(i);
  }
  for (int i = 0; i < dim(); ++i)
    if (!is_zero(value[i]) && degree(i) != total + 2 - k)
      throw Error(ErrorKind::DegreeError, "l_" + std::to_string(k) + " value leaves degree " +
                                              std::to_string(total + 2 - k));
  const int s = graded_sort_sign(idx, space_.degrees);
  if (s == 0) {
    if (!is_zero(value)) throw Error(ErrorKind::NotSkew, "nonzero bracket on a repeated even generator");
    return;
  }
  if (is_zero(value)) {
    entries_.erase(idx);
    return;
  }
  Element v = value;
  if (s < 0)
    for (auto& c : v) c = -c;
  entries_[idx] = std::move(v);
}

Element BracketTable::bracket_basis(std::span<const int> idx) const {
  std::vector<int> sorted(idx.begin(), idx.end());
  const int s = graded_sort_sign(sorted, space_.degrees);
  if (s == 0) return zero();
  auto it = entries_.find(sorted);
  if (it == entries_.end()) return zero();
  Element out = it->second;
  if (s < 0)
    for (auto& c : out) c = -c;
  return out;
}

namespace {

void bracket_rec(const BracketTable& b, std::span<const Element> args, std::size_t pos, const Rational& coeff,
                 std::vector<int>& idx, Element& out) {
  if (pos == args.size()) {
    Element v = b.bracket_basis(idx);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) out[i] += coeff * v[i];
    return;
  }
  for (int m = 0; m < b.dim(); ++m) {
    if (is_zero(args[pos][m])) continue;
    idx[pos] = m;
    bracket_rec(b, args, pos + 1, coeff * args[pos][m], idx, out);
  }
}

Element basis_element(int dim, int i) {
  Element e(dim, Rational(0));
  e[i] = 1;
  return e;
}

}  // namespace

Element BracketTable::bracket(std::span<const Element> args) const {
  Element out = zero();
  if (args.empty() || static_cast<int>(args.size()) > n_ + 1) return out;
  std::vector<int> idx(args.size(), 0);
  bracket_rec(*this, args, 0, Rational(1), idx, out);
  return out;
}

std::optional<std::vector<int>> BracketTable::property_p_violation() const {
  for (const auto& [idx, v] : entries_) {
    if (idx.size() < 2) continue;
    int total = 0;
    for (int i : idx) total += degree(i);
    if (total < 0) return idx;
  }
  return std::nullopt;
}

Element jacobiator(const BracketTable& b, std::span<const int> idx) {
  const int m = static_cast<int>(idx.size());
  const int dim = b.dim();
  std::vector<int> degrees;
  for (int i : idx) degrees.push_back(b.degree(i));
  Element out = b.zero();
  for (int i = 1; i <= m; ++i) {
    const int j = m + 1 - i;
    if (i > b.n() + 1 || j > b.n() + 1) continue;
    const int blocks[2] = {i, m - i};
    for (const auto& sigma : unshuffles(blocks)) {
      int sign = sigma.sign() * koszul_sign(sigma, degrees);
      if ((i * (j - 1)) % 2) sign = -sign;
      std::vector<int> inner;
      for (int t = 1; t <= i; ++t) inner.push_back(idx[sigma(t) - 1]);
      std::vector<Element> args{b.bracket_basis(inner)};
      if (is_zero(args[0])) continue;
      for (int t = i + 1; t <= m; ++t) args.push_back(basis_element(dim, idx[sigma(t) - 1]));
      Element v = b.bracket(args);
      for (int c = 0; c < dim; ++c)
        if (!is_zero(v[c])) out[c] += sign * v[c];
    }
  }
  return out;
}

CheckReport check_generalized_jacobi(const BracketTable& b, int max_m) {
  CheckReport report;
  report.title = "generalized Jacobi";
  for (int m = 1; m <= max_m; ++m) {
    std::string witness;
    for (const auto& tuple : multisets(b.dim(), m)) {
      Element j = jacobiator(b, tuple);
      if (!is_zero(j)) {
        witness = format_tuple(b.space().names, tuple) + ": " + b.space().format(j);
        break;
      }
    }
    report.add("jacobi m=" + std::to_string(m), witness.empty(), witness);
  }
  return report;
}

BracketTable lie_as_linfty(const LieAlgebra& g) {
  BracketTable t(GradedSpace{g.names(), std::vector<int>(g.dim(), 0)}, 1);
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) t.set({i, j}, g.bracket_basis(i, j));
  return t;
}

BracketTable central_extension(const LieAlgebra& g, const ScalarCochain& c, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "central n-extension needs n >= 1");
  if (c.degree() != n + 1 || c.dim() != g.dim())
    throw Error(ErrorKind::DegreeError, "the cocycle must have degree n+1 on g");
  if (!ce_differential(g, c).is_zero()) throw Error(ErrorKind::NotACocycle, "delta c != 0");
  const int d = g.dim();
  GradedSpace space{g.names(), std::vector<int>(d, 0)};
  space.names.push_back("r");
  space.degrees.push_back(1 - n);
  BracketTable t(space, n);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Element v = g.bracket_basis(i, j);
      v.push_back(n == 1 ? c.at(make_index_set(std::vector<int>{i, j})) : Rational(0));
      t.set({i, j}, v);
    }
  if (n >= 2)
    for (const auto& tuple : increasing_subsets(d, n + 1)) {
      Element v(d + 1, Rational(0));
      v[d] = c.at(make_index_set(tuple));
      t.set(tuple, v);
    }
  return t;
}

Element TableTarget::l1(const Value& v) const {
  std::vector<Element> args{v};
  return table_.bracket(args);
}

Element TableTarget::lk(std::span<const Value> args) const { return table_.bracket(args); }

std::optional<std::string> TableTarget::difference(const Value& a, const Value& b) const {
  Element d = a;
  d.resize(table_.dim(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) d[i] -= b[i];
  if (is_zero(d)) return std::nullopt;
  return "lhs - rhs = " + table_.space().format(d);
}

std::optional<std::string> TableTarget::degree_violation(const Value& v, int d) const {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i]) && table_.degree(static_cast<int>(i)) != d)
      return table_.space().names[i] + " is not in degree " + std::to_string(d);
  return std::nullopt;
}

namespace {

void require_property_p(const BracketTable& target) {
  if (auto bad = target.property_p_violation())
    throw Error(ErrorKind::PropertyPViolated,
                "l_" + std::to_string(bad->size()) + format_tuple(target.space().names, *bad) +
                    " is nonzero in negative total degree");
}

void degree_checks(const TableTarget& t, const TableMorphism& m, CheckReport& report) {
  std::string witness;
  for (int k = 1; k <= m.n && witness.empty(); ++k)
    for (const auto& [s, v] : m.component(k).values())
      if (auto bad = t.degree_violation(v, 1 - k)) {
        witness = "f_" + std::to_string(k) + ": " + *bad;
        break;
      }
  report.add("degrees", witness.empty(), witness);
}

}  // namespace

CheckReport check_lie_to_linfty_morphism(const LieAlgebra& g, const BracketTable& target, const TableMorphism& m) {
  require_property_p(target);
  if (m.n != target.n()) throw Error(ErrorKind::SizeMismatch, "morphism and target disagree on n");
  TableTarget t(target);
  CheckReport report;
  report.title = "morphism";
  degree_checks(t, m, report);
  report.merge(morphism_report(t, g, m, nullptr));
  return report;
}

CheckReport check_ext_morphism(const LieAlgebra& g, const ScalarCochain& c, const BracketTable& target,
                               const TableMorphism& m) {
  require_property_p(target);
  if (m.n != target.n()) throw Error(ErrorKind::SizeMismatch, "morphism and target disagree on n");
  if (c.degree() != m.n + 1) throw Error(ErrorKind::DegreeError, "the cocycle must have degree n+1");
  TableTarget t(target);
  CheckReport report;
  report.title = "extension morphism";
  degree_checks(t, m, report);
  if (m.central) {
    auto bad = t.degree_violation(*m.central, 1 - m.n);
    report.add("central degree", !bad, bad.value_or(""));
  }
  report.merge(morphism_report(t, g, m, &c));
  return report;
}

TableMorphism cocycle_quasi_iso(const LieAlgebra& g, const ScalarCochain& c, const ScalarCochain& c_prime,
                                const ScalarCochain& b, int n) {
  if (b.degree() != n || c.degree() != n + 1 || c_prime.degree() != n + 1)
    throw Error(ErrorKind::DegreeError, "need b of degree n and cocycles of degree n+1");
  ScalarCochain db = ce_differential(g, b);
  for (const auto& tuple : increasing_subsets(g.dim(), n + 1)) {
    IndexSet s = make_index_set(tuple);
    if (db.at(s) != c_prime.at(s) - c.at(s))
      throw Error(ErrorKind::CoboundaryMismatch, "c' - c differs from delta b at " + format_tuple(g.names(), tuple));
  }
  const int d = g.dim();
  const Element zero(d + 1, Rational(0));
  TableMorphism m;
  m.n = n;
  for (int k = 1; k <= n; ++k) m.f.emplace_back(d, k, zero);
  for (int i = 0; i < d; ++i) {
    Element v = basis_element(d + 1, i);
    if (n == 1) v[d] = -b.at(make_index_set(std::vector<int>{i}));
    m.f[0].set(make_index_set(std::vector<int>{i}), v);
  }
  if (n >= 2)
    for (const auto& [s, val] : b.values()) {
      Element v = zero;
      v[d] = -val;
      m.f[n - 1].set(s, v);
    }
  m.central = basis_element(d + 1, d);
  return m;
}

TableMorphism identity_morphism(const LieAlgebra& g) {
  TableMorphism m;
  m.f.emplace_back(g.dim(), 1, Element(g.dim(), Rational(0)));
  for (int i = 0; i < g.dim(); ++i) m.f[0].set(make_index_set(std::vector<int>{i}), basis_element(g.dim(), i));
  return m;
}

}  // namespace plectic
