#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plectic/cochain.hpp"
#include "plectic/lie_algebra.hpp"
#include "plectic/report.hpp"

namespace plectic {

// Coordinates of an element of a finite graded space in its basis.
using Element = std::vector<Rational>;

struct GradedSpace {
  std::vector<std::string> names;
  std::vector<int> degrees;

  int dim() const { return static_cast<int>(names.size()); }
  std::string format(const Element& e) const;
};

// Multibrackets l_1..l_{n+1} on a Lie n-algebra, stored on non-decreasing basis
// tuples; other orderings are recovered by the Koszul-signed permutation sign.
class BracketTable {
 public:
  BracketTable() = default;
  // Degrees must lie in 1-n..0.
  BracketTable(GradedSpace space, int n);

  const GradedSpace& space() const { return space_; }
  int n() const { return n_; }
  int dim() const { return space_.dim(); }
  int degree(int i) const { return space_.degrees[i]; }

  // Sets l_k(e_idx) for idx in any order. Throws DegreeError unless the value lies in
  // degree sum + 2 - k, NotSkew for a repeated even generator with nonzero value.
  void set(std::vector<int> idx, const Element& value);
  Element bracket_basis(std::span<const int> idx) const;
  // Multilinear extension; elements may be inhomogeneous.
  Element bracket(std::span<const Element> args) const;

  const std::map<std::vector<int>, Element>& entries() const { return entries_; }
  Element zero() const { return Element(dim(), Rational(0)); }

  // First stored entry of arity >= 2 with total input degree < 0.
  std::optional<std::vector<int>> property_p_violation() const;

 private:
  GradedSpace space_;
  int n_ = 1;
  std::map<std::vector<int>, Element> entries_;
};

// Sign s with l(x_idx) = s l(x_sorted) after sorting idx ascending; 0 when a
// repeated generator has even degree.
int graded_sort_sign(std::vector<int>& idx, std::span<const int> degrees);

// sum_{i+j=m+1} sum_{sigma in Sh(i,m-i)} (-1)^sigma eps(sigma) (-1)^{i(j-1)}
//   l_j(l_i(x_sigma(1..i)), x_sigma(i+1..m)).
Element jacobiator(const BracketTable& b, std::span<const int> idx);
CheckReport check_generalized_jacobi(const BracketTable& b, int max_m);

// g concentrated in degree 0 with l_2 = [.,.].
BracketTable lie_as_linfty(const LieAlgebra& g);

// g in degree 0 plus a central generator r in degree 1-n; l_2 = [.,.],
// l_{n+1} = c r on g. Throws NotACocycle.
BracketTable central_extension(const LieAlgebra& g, const ScalarCochain& c, int n);

// Structure maps f_1..f_n out of a Lie algebra (or its central extension, where
// f_1 also carries the image of the central generator).
template <class V>
struct MorphismData {
  int n = 1;
  std::vector<Cochain<V>> f;  // f[k-1] = f_k
  std::optional<V> central;   // f_1(r)

  const Cochain<V>& component(int k) const { return f[k - 1]; }
};

using TableMorphism = MorphismData<Element>;

// Target adaptor for a basis-table L-infinity algebra.
class TableTarget {
 public:
  using Value = Element;
  explicit TableTarget(const BracketTable& table) : table_(table) {}

  Value zero() const { return table_.zero(); }
  Value l1(const Value& v) const;
  Value lk(std::span<const Value> args) const;
  std::optional<std::string> difference(const Value& a, const Value& b) const;
  // Nonzero coordinates outside degree d.
  std::optional<std::string> degree_violation(const Value& v, int d) const;

 private:
  const BracketTable& table_;
};

namespace detail {

inline std::string basis_tuple(const LieAlgebra& g, std::span<const int> idx) {
  return format_tuple(g.names(), std::vector<int>(idx.begin(), idx.end()));
}

}  // namespace detail

// Left and right sides of the structure equation of arity k (2 <= k <= n+1) on
// the basis elements idx; the central term f_1(c(x)) is added on the left when c is given.
template <class Target>
std::pair<typename Target::Value, typename Target::Value> morphism_equation_sides(
    const Target& t, const LieAlgebra& g, const MorphismData<typename Target::Value>& m, std::span<const int> idx,
    const ScalarCochain* c) {
  using V = typename Target::Value;
  const int k = static_cast<int>(idx.size());
  V lhs = t.zero();
  std::vector<int> rest;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const LieVector& br = g.bracket_basis(idx[a], idx[b]);
      if (is_zero(br)) continue;
      rest.clear();
      for (int s = 0; s < k; ++s)
        if (s != a && s != b) rest.push_back(idx[s]);
      add_scaled(lhs, Rational((a + b) % 2 ? 1 : -1), m.component(k - 1).with_first(br, rest));
    }
  if (c && k == m.n + 1 && m.central) {
    std::vector<int> sorted(idx.begin(), idx.end());
    add_scaled(lhs, c->on_basis(sorted), *m.central);
  }
  V rhs = t.zero();
  if (k <= m.n) add_scaled(rhs, Rational(1), t.l1(m.component(k).on_basis(idx)));
  std::vector<V> images;
  for (int i : idx) images.push_back(m.component(1).at(make_index_set(std::vector<int>{i})));
  add_scaled(rhs, Rational(1), t.lk(images));
  return {std::move(lhs), std::move(rhs)};
}

template <class Target>
CheckReport morphism_report(const Target& t, const LieAlgebra& g, const MorphismData<typename Target::Value>& m,
                            const ScalarCochain* c) {
  CheckReport report;
  report.title = c ? "extension morphism" : "morphism";
  if (static_cast<int>(m.f.size()) != m.n)
    throw Error(ErrorKind::SizeMismatch, "one structure map per arity 1..n is required");
  if (c) {
    if (!m.central) {
      report.fail("l_1 f_1(r) = 0", "no image of the central generator");
    } else {
      auto diff = t.difference(t.l1(*m.central), t.zero());
      report.add("l_1 f_1(r) = 0", !diff, diff.value_or(""));
    }
  }
  for (int k = 2; k <= m.n + 1; ++k) {
    std::string name = k <= m.n ? "structure equation k=" + std::to_string(k)
                                : "top equation k=" + std::to_string(k);
    std::string witness;
    for (const auto& tuple : increasing_subsets(g.dim(), k)) {
      auto [lhs, rhs] = morphism_equation_sides(t, g, m, tuple, c);
      if (auto diff = t.difference(lhs, rhs)) {
        witness = detail::basis_tuple(g, tuple) + ": " + *diff;
        break;
      }
    }
    report.add(name, witness.empty(), witness);
  }
  return report;
}

// Throws PropertyPViolated when the target fails property (P).
CheckReport check_lie_to_linfty_morphism(const LieAlgebra& g, const BracketTable& target, const TableMorphism& m);
CheckReport check_ext_morphism(const LieAlgebra& g, const ScalarCochain& c, const BracketTable& target,
                               const TableMorphism& m);

// Morphism between the central n-extensions for c and c' = c + delta b: f_1 = id,
// f_n = -b on g (f_1 picks up -b when n = 1). Throws CoboundaryMismatch.
TableMorphism cocycle_quasi_iso(const LieAlgebra& g, const ScalarCochain& c, const ScalarCochain& c_prime,
                                const ScalarCochain& b, int n);

// Identity of g into g viewed as a Lie 1-algebra.
TableMorphism identity_morphism(const LieAlgebra& g);

}  // namespace plectic
