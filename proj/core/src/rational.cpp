#include "plectic/rational.hpp"

#include <cctype>

#include "plectic/error.hpp"

namespace plectic {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::DegreeError: return "DegreeError";
    case ErrorKind::ChartMismatch: return "ChartMismatch";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotPerfect: return "NotPerfect";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::Obstructed: return "Obstructed";
    case ErrorKind::NoPrimitive: return "NoPrimitive";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownCoordinate: return "UnknownCoordinate";
    case ErrorKind::MorphismCheckFailed: return "MorphismCheckFailed";
    case ErrorKind::PropertyPViolated: return "PropertyPViolated";
    case ErrorKind::CoboundaryMismatch: return "CoboundaryMismatch";
    case ErrorKind::NoHamiltonianWitness: return "NoHamiltonianWitness";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational r{parse_integer(num), d};
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

std::string to_string(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace plectic
