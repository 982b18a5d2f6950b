#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "plectic/forms.hpp"

namespace plectic {

// Expression grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*          juxtaposition multiplies (wedges)
//   factor := atom ['^' int]  |  dcoord ('^' dcoord)*  |  @coord ('^' @coord)*
//   atom   := int ['/' int] | coord | '(' expr ')'
// "dx1" is the differential of coordinate x1, "@x1" the coordinate vector field.
using Expression = std::variant<MultiPoly, PolyForm, PolyMultiVec>;

Expression parse_expression(std::string_view src, const Chart& chart);

MultiPoly parse_polynomial(std::string_view src, const Chart& chart);
// A bare polynomial is accepted as a 0-form.
PolyForm parse_form(std::string_view src, const Chart& chart);
PolyMultiVec parse_field(std::string_view src, const Chart& chart);

// Canonical printer: terms ordered by index set (lexicographic), then by
// exponent vector (descending); rationals as p/q.
std::string to_string(const MultiPoly& p, const Chart& chart);
std::string to_string(const MultiPoly& p);
std::string to_string(const PolyForm& a);
std::string to_string(const PolyMultiVec& v);
std::string to_string(const Expression& e, const Chart& chart);

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const PolyForm& a) { return os << to_string(a); }
inline std::ostream& operator<<(std::ostream& os, const PolyMultiVec& v) { return os << to_string(v); }

}  // namespace plectic
