#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "plectic/rational.hpp"

namespace plectic {

inline constexpr int kMaxVars = 16;

// Exponent multi-index; entries past the chart size stay zero.
using Exponents = std::array<std::uint8_t, kMaxVars>;

int total_degree(const Exponents& e);

// Polynomial in nvars variables with exact rational coefficients.
// Zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars);

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int index);
  static MultiPoly monomial(int nvars, const Exponents& e, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const Terms& terms() const { return terms_; }
  int total_degree() const;

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly& operator*=(const MultiPoly& other);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  bool operator==(const MultiPoly& other) const { return nvars_ == other.nvars_ && terms_ == other.terms_; }

  MultiPoly derivative(int var) const;
  Rational evaluate(std::span<const Rational> point) const;

  // Re-embed into a chart with more variables; variable i maps to offset + i.
  MultiPoly embed(int new_nvars, int offset) const;

 private:
  int nvars_ = 0;
  Terms terms_;
};

}  // namespace plectic
