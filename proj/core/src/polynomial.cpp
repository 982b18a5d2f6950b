#include "plectic/polynomial.hpp"

#include "plectic/error.hpp"

namespace plectic {

int total_degree(const Exponents& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw Error(ErrorKind::UnsupportedDimension, "charts support at most 16 coordinates");
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents{}, c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw Error(ErrorKind::InvalidInput, "variable index out of range");
  Exponents e{};
  e[index] = 1;
  return monomial(nvars, e, Rational(1));
}

MultiPoly MultiPoly::monomial(int nvars, const Exponents& e, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && plectic::total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, plectic::total_degree(e));
  return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (plectic::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (plectic::is_zero(it->second)) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (nvars_ != other.nvars_) {
    if (other.is_zero()) return *this;
    if (is_zero() && terms_.empty()) nvars_ = other.nvars_;
    else throw Error(ErrorKind::ChartMismatch, "polynomials over different variable counts");
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (nvars_ != other.nvars_) {
    if (other.is_zero()) return *this;
    if (is_zero()) nvars_ = other.nvars_;
    else throw Error(ErrorKind::ChartMismatch, "polynomials over different variable counts");
  }
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (plectic::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_ && !a.is_zero() && !b.is_zero())
    throw Error(ErrorKind::ChartMismatch, "polynomials over different variable counts");
  MultiPoly out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{};
      for (int i = 0; i < kMaxVars; ++i) {
        int s = ea[i] + eb[i];
        if (s > 255) throw Error(ErrorKind::DegreeError, "exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    out.add_term(f, c * e[var]);
  }
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw Error(ErrorKind::SizeMismatch, "evaluation point has wrong dimension");
  Rational sum = 0;
  std::vector<std::vector<Rational>> powers(nvars_);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Rational(1));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * point[i]);
      term *= pw[e[i]];
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::embed(int new_nvars, int offset) const {
  if (offset < 0 || offset + nvars_ > new_nvars)
    throw Error(ErrorKind::ChartMismatch, "embedding does not fit the target chart");
  MultiPoly out(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents f{};
    for (int i = 0; i < nvars_; ++i) f[offset + i] = e[i];
    out.add_term(f, c);
  }
  return out;
}

}  // namespace plectic
