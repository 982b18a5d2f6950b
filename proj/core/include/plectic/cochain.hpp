#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plectic/combinatorics.hpp"
#include "plectic/forms.hpp"
#include "plectic/lie_algebra.hpp"

namespace plectic {

// Value-space plumbing shared by cochains, symmetric tensors and morphism tables.
inline void add_scaled(Rational& acc, const Rational& c, const Rational& v) { acc += c * v; }
inline void add_scaled(std::vector<Rational>& acc, const Rational& c, const std::vector<Rational>& v) {
  if (acc.size() < v.size()) acc.resize(v.size(), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) acc[i] += c * v[i];
}
template <class Tag>
void add_scaled(GradedPoly<Tag>& acc, const Rational& c, const GradedPoly<Tag>& v) {
  if (v.is_zero() || is_zero(c)) return;
  acc += c * v;
}
template <class Tag>
bool is_zero(const GradedPoly<Tag>& v) {
  return v.is_zero();
}

namespace detail {
// Unqualified call so value types declared later are found by ADL.
template <class V>
bool value_is_zero(const V& v) {
  return is_zero(v);
}
}  // namespace detail

// Skew multilinear map on g^k, stored on strictly increasing basis k-subsets.
template <class V>
class Cochain {
 public:
  using Values = std::map<IndexSet, V, IndexSetLess>;

  Cochain() = default;
  Cochain(int dim, int degree, V zero) : dim_(dim), degree_(degree), zero_(std::move(zero)) {}

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const V& zero() const { return zero_; }
  const Values& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }

  const V& at(IndexSet s) const {
    auto it = values_.find(s);
    return it == values_.end() ? zero_ : it->second;
  }
  const V& at(std::span<const int> sorted) const { return at(make_index_set(sorted)); }

  void set(IndexSet s, V v) {
    if (popcount(s) != degree_) throw Error(ErrorKind::DegreeError, "cochain key has wrong arity");
    if (detail::value_is_zero(v)) values_.erase(s);
    else values_[s] = std::move(v);
  }
  void add(IndexSet s, const Rational& c, const V& v) {
    V cur = at(s);
    add_scaled(cur, c, v);
    set(s, std::move(cur));
  }

  // Value on basis elements in arbitrary order.
  V on_basis(std::span<const int> idx) const {
    std::vector<int> sorted(idx.begin(), idx.end());
    int s = sort_sign(sorted);
    V out = zero_;
    if (s != 0) add_scaled(out, Rational(s), at(make_index_set(sorted)));
    return out;
  }

  // c(x, e_rest...) for a vector x and basis elements rest.
  V with_first(const LieVector& x, std::span<const int> rest) const {
    V out = zero_;
    std::vector<int> idx(rest.size() + 1);
    for (std::size_t r = 0; r < rest.size(); ++r) idx[r + 1] = rest[r];
    for (int m = 0; m < dim_; ++m) {
      if (detail::value_is_zero(x[m])) continue;
      idx[0] = m;
      add_scaled(out, x[m], on_basis(idx));
    }
    return out;
  }

  // Full multilinear evaluation.
  V evaluate(std::span<const LieVector> xs) const {
    if (static_cast<int>(xs.size()) != degree_) throw Error(ErrorKind::SizeMismatch, "cochain arity mismatch");
    V out = zero_;
    std::vector<int> idx(degree_, 0);
    eval_rec(xs, 0, Rational(1), idx, out);
    return out;
  }

  bool operator==(const Cochain& other) const {
    return dim_ == other.dim_ && degree_ == other.degree_ && values_ == other.values_;
  }

 private:
  void eval_rec(std::span<const LieVector> xs, int pos, const Rational& coeff, std::vector<int>& idx, V& out) const {
    if (pos == degree_) {
      add_scaled(out, coeff, on_basis(idx));
      return;
    }
    for (int m = 0; m < dim_; ++m) {
      if (detail::value_is_zero(xs[pos][m])) continue;
      idx[pos] = m;
      eval_rec(xs, pos + 1, coeff * xs[pos][m], idx, out);
    }
  }

  int dim_ = 0;
  int degree_ = 0;
  V zero_{};
  Values values_;
};

using ScalarCochain = Cochain<Rational>;
using FormCochain = Cochain<PolyForm>;

// (delta c)(x_1..x_{k+1}) = sum_{i<j} (-1)^{i+j} c([x_i,x_j], x_1..^i..^j..x_{k+1}).
template <class V>
Cochain<V> ce_differential(const LieAlgebra& g, const Cochain<V>& c) {
  const int k = c.degree();
  Cochain<V> out(g.dim(), k + 1, c.zero());
  std::vector<int> rest;
  for (const auto& tuple : increasing_subsets(g.dim(), k + 1)) {
    V sum = c.zero();
    for (int i = 0; i < k + 1; ++i)
      for (int j = i + 1; j < k + 1; ++j) {
        const LieVector& br = g.bracket_basis(tuple[i], tuple[j]);
        if (is_zero(br)) continue;
        rest.clear();
        for (int t = 0; t < k + 1; ++t)
          if (t != i && t != j) rest.push_back(tuple[t]);
        V term = c.with_first(br, rest);
        // 1-based i+j has the parity of 0-based i+j.
        add_scaled(sum, Rational(((i + j) % 2) ? -1 : 1), term);
      }
    out.set(make_index_set(tuple), std::move(sum));
  }
  return out;
}

// Primitive b with delta b = c, or nullopt if [c] != 0. Throws NotACocycle.
std::optional<ScalarCochain> is_ce_coboundary(const LieAlgebra& g, const ScalarCochain& c);

// Point evaluation of a cochain of functions.
ScalarCochain evaluate_at(const FormCochain& f, std::span<const Rational> point);

std::string to_string(const ScalarCochain& c, const LieAlgebra& g);

}  // namespace plectic
