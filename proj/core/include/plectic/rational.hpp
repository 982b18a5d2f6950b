#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace plectic {

using Rational = mpq_class;

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// Lowest-terms "p" or "p/q".
std::string to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational factorial(int n);
Rational binomial(int n, int k);

std::string to_string(const std::vector<Rational>& v);

}  // namespace plectic
