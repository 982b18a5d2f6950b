#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plectic/error.hpp"
#include "plectic/polynomial.hpp"

namespace plectic {

// Strictly increasing index set, stored as a bit mask.
using IndexSet = std::uint32_t;

IndexSet make_index_set(std::span<const int> indices);
std::vector<int> indices_of(IndexSet s);
int popcount(IndexSet s);

// Lexicographic order on the sorted index lists.
struct IndexSetLess {
  bool operator()(IndexSet a, IndexSet b) const;
};

// Sign of merging sorted a followed by sorted b into sorted order; 0 if they overlap.
int merge_sign(IndexSet a, IndexSet b);

class Chart {
 public:
  Chart() = default;
  explicit Chart(std::vector<std::string> names);
  static Chart numbered(const std::string& prefix, int n);

  int size() const { return names_ ? static_cast<int>(names_->size()) : 0; }
  const std::vector<std::string>& names() const;
  const std::string& name(int i) const { return (*names_)[i]; }
  std::optional<int> index_of(const std::string& name) const;
  Chart concat(const Chart& other) const;

  bool operator==(const Chart& other) const;

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

struct FormTag {};
struct FieldTag {};

// Homogeneous element of the exterior algebra over polynomial coefficients:
// sum_I f_I dx_I for forms, sum_I f_I d_I for multivector fields.
template <class Tag>
class GradedPoly {
 public:
  using Terms = std::map<IndexSet, MultiPoly, IndexSetLess>;

  GradedPoly() = default;
  GradedPoly(Chart chart, int degree);

  static GradedPoly scalar(const Chart& chart, MultiPoly f);
  static GradedPoly basis(const Chart& chart, std::span<const int> indices, const MultiPoly& coeff);
  static GradedPoly basis(const Chart& chart, std::initializer_list<int> indices, const Rational& c = 1);

  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int nvars() const { return chart_.size(); }

  void add_term(IndexSet set, const MultiPoly& coeff);
  MultiPoly coefficient(IndexSet set) const;

  GradedPoly& operator+=(const GradedPoly& other);
  GradedPoly& operator-=(const GradedPoly& other);
  GradedPoly& operator*=(const Rational& c);
  GradedPoly& operator*=(const MultiPoly& f);

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }
  friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
  friend GradedPoly operator*(const MultiPoly& f, GradedPoly a) { return a *= f; }
  GradedPoly operator-() const;

  bool operator==(const GradedPoly& other) const;

  // Re-express on a larger chart, coordinate i becoming offset + i.
  GradedPoly embed(const Chart& target, int offset) const;

 private:
  void require_compatible(const GradedPoly& other) const;
  Chart chart_;
  int degree_ = 0;
  Terms terms_;
};

using PolyForm = GradedPoly<FormTag>;
using PolyMultiVec = GradedPoly<FieldTag>;

template <class Tag>
GradedPoly<Tag> wedge(const GradedPoly<Tag>& a, const GradedPoly<Tag>& b);

PolyForm exterior_d(const PolyForm& a);

// iota(v_1 ^ ... ^ v_m) a = iota_{v_m} ... iota_{v_1} a.
PolyForm interior(const PolyMultiVec& v, const PolyForm& a);

// L_v a = d iota(v) a - (-1)^{deg v} iota(v) d a.
PolyForm lie_derivative(const PolyMultiVec& v, const PolyForm& a);

// Lie bracket of two vector fields, [X, Y] = XY - YX.
PolyMultiVec field_bracket(const PolyMultiVec& x, const PolyMultiVec& y);

PolyMultiVec schouten(const PolyMultiVec& u, const PolyMultiVec& v);

// Radial homotopy operator about the origin; dK + Kd = id in positive degree.
PolyForm poincare_homotopy(const PolyForm& a);

// Components of a degree-1 field at a point.
std::vector<Rational> evaluate_field(const PolyMultiVec& v, std::span<const Rational> point);

Rational evaluate_on_frame(const PolyForm& a, std::span<const Rational> point,
                           const std::vector<std::vector<Rational>>& vectors);

// Euler field sum x_i d_i.
PolyMultiVec euler_field(const Chart& chart);

// dx_1 ^ .. ^ dx_N.
PolyForm volume_form(const Chart& chart);
// (1/N) iota_E vol, a primitive of the volume form invariant under linear volume-preserving maps.
PolyForm volume_primitive(const Chart& chart);

// Linear field p -> A p, i.e. sum_i (A p)_i d_i.
PolyMultiVec linear_field(const Chart& chart, const std::vector<std::vector<Rational>>& a);

extern template class GradedPoly<FormTag>;
extern template class GradedPoly<FieldTag>;
extern template PolyForm wedge(const PolyForm&, const PolyForm&);
extern template PolyMultiVec wedge(const PolyMultiVec&, const PolyMultiVec&);

}  // namespace plectic
