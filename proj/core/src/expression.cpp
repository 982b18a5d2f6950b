#include "plectic/expression.hpp"

#include <cctype>
#include <vector>

namespace plectic {

namespace {

enum class Tok { Int, Ident, At, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Int, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '@': k = Tok::At; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '/': k = Tok::Slash; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

enum class Kind { Scalar, Form, Field };

// Forms and fields share the exterior-algebra arithmetic; both are carried as
// PolyForm while parsing and retagged at the end.
struct Value {
  Kind kind;
  PolyForm g;
};

class Parser {
 public:
  Parser(std::string_view src, const Chart& chart) : tokens_(tokenize(src)), chart_(chart) {}

  Value parse() {
    Value v = expr();
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  const Token& next() { return tokens_[pos_++]; }

  Value scalar(const MultiPoly& p) { return {Kind::Scalar, PolyForm::scalar(chart_, p)}; }

  Value add(Value a, const Value& b, bool subtract, std::size_t pos) {
    if (b.g.is_zero() && b.kind == Kind::Scalar) return a;
    if (a.g.is_zero() && a.kind == Kind::Scalar) {
      if (subtract) return {b.kind, -b.g};
      return b;
    }
    if (a.kind != b.kind) throw ParseError(pos, "cannot add forms, fields and functions");
    if (a.g.degree() != b.g.degree()) throw ParseError(pos, "sum of terms of different degree");
    if (subtract) a.g -= b.g;
    else a.g += b.g;
    return a;
  }

  Value multiply(const Value& a, const Value& b, std::size_t pos) {
    Kind k = a.kind;
    if (a.kind == Kind::Scalar) k = b.kind;
    else if (b.kind != Kind::Scalar && b.kind != a.kind) throw ParseError(pos, "cannot multiply a form by a field");
    return {k, wedge(a.g, b.g)};
  }

  Value expr() {
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = next().kind == Tok::Minus;
    std::size_t pos = peek().pos;
    Value acc = scalar(MultiPoly(chart_.size()));
    acc = add(acc, term(), negate, pos);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool sub = next().kind == Tok::Minus;
      pos = peek().pos;
      acc = add(acc, term(), sub, pos);
    }
    return acc;
  }

  bool starts_factor(Tok k) const { return k == Tok::Int || k == Tok::Ident || k == Tok::At || k == Tok::LParen; }

  Value term() {
    std::size_t pos = peek().pos;
    Value acc = factor();
    while (true) {
      if (peek().kind == Tok::Star) {
        next();
        pos = peek().pos;
        acc = multiply(acc, factor(), pos);
      } else if (starts_factor(peek().kind)) {
        pos = peek().pos;
        acc = multiply(acc, factor(), pos);
      } else {
        break;
      }
    }
    return acc;
  }

  int integer_exponent() {
    const Token& t = next();
    if (t.kind != Tok::Int) throw ParseError(t.pos, "expected an integer exponent");
    if (t.text.size() > 3 || std::stoi(t.text) > 255) throw ParseError(t.pos, "exponent too large");
    return std::stoi(t.text);
  }

  std::optional<int> differential_of(const std::string& ident) const {
    if (ident.size() < 2 || ident[0] != 'd') return std::nullopt;
    return chart_.index_of(ident.substr(1));
  }

  Value power(Value base, int e, std::size_t pos) {
    if (base.kind != Kind::Scalar) throw ParseError(pos, "only functions can be raised to a power");
    Value out = scalar(MultiPoly::constant(chart_.size(), 1));
    for (int i = 0; i < e; ++i) out.g = wedge(out.g, base.g);
    return out;
  }

  Value factor() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Int: {
        Rational q = parse_rational(t.text);
        if (peek().kind == Tok::Slash) {
          next();
          const Token& d = next();
          if (d.kind != Tok::Int) throw ParseError(d.pos, "expected a denominator");
          q = parse_rational(t.text + "/" + d.text);
        }
        Value v = scalar(MultiPoly::constant(chart_.size(), q));
        if (peek().kind == Tok::Caret) {
          next();
          v = power(v, integer_exponent(), t.pos);
        }
        return v;
      }
      case Tok::Ident: {
        if (auto idx = chart_.index_of(t.text)) {
          Value v = scalar(MultiPoly::variable(chart_.size(), *idx));
          if (peek().kind == Tok::Caret) {
            next();
            v = power(v, integer_exponent(), t.pos);
          }
          return v;
        }
        if (auto idx = differential_of(t.text)) {
          std::vector<int> slots{*idx};
          while (peek().kind == Tok::Caret) {
            next();
            const Token& u = next();
            auto j = u.kind == Tok::Ident ? differential_of(u.text) : std::nullopt;
            if (!j) throw ParseError(u.pos, "expected a differential after '^'");
            slots.push_back(*j);
          }
          return {Kind::Form, PolyForm::basis(chart_, slots, MultiPoly::constant(chart_.size(), 1))};
        }
        throw Error(ErrorKind::UnknownCoordinate, "'" + t.text + "' at " + std::to_string(t.pos));
      }
      case Tok::At: {
        std::vector<int> slots{field_index()};
        while (peek().kind == Tok::Caret) {
          next();
          const Token& at = next();
          if (at.kind != Tok::At) throw ParseError(at.pos, "expected '@' after '^'");
          slots.push_back(field_index());
        }
        return {Kind::Field, PolyForm::basis(chart_, slots, MultiPoly::constant(chart_.size(), 1))};
      }
      case Tok::LParen: {
        Value v = expr();
        const Token& close = next();
        if (close.kind != Tok::RParen) throw ParseError(close.pos, "expected ')'");
        if (peek().kind == Tok::Caret) {
          next();
          v = power(v, integer_exponent(), t.pos);
        }
        return v;
      }
      default:
        throw ParseError(t.pos, t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  int field_index() {
    const Token& u = next();
    if (u.kind != Tok::Ident) throw ParseError(u.pos, "expected a coordinate after '@'");
    auto idx = chart_.index_of(u.text);
    if (!idx) throw Error(ErrorKind::UnknownCoordinate, "'" + u.text + "' at " + std::to_string(u.pos));
    return *idx;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Chart& chart_;
};

PolyMultiVec retag(const PolyForm& g) {
  PolyMultiVec out(g.chart(), g.degree());
  for (const auto& [s, f] : g.terms()) out.add_term(s, f);
  return out;
}

std::string format_monomial(const Exponents& e, const Chart& chart) {
  std::string out;
  for (int i = 0; i < chart.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += chart.name(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

template <class Tag>
std::string format_graded(const GradedPoly<Tag>& g, const char* basis_prefix) {
  const Chart& chart = g.chart();
  std::string out;
  for (const auto& [s, f] : g.terms()) {
    std::string basis;
    for (int i : indices_of(s)) {
      if (!basis.empty()) basis += "^";
      basis += basis_prefix + chart.name(i);
    }
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
      const Rational& c = it->second;
      bool neg = sgn(c) < 0;
      Rational a = neg ? Rational(-c) : c;
      std::string mono = format_monomial(it->first, chart);
      std::string body;
      if (a != 1 || (mono.empty() && basis.empty())) body = to_string(a);
      for (const auto* part : {&mono, &basis}) {
        if (part->empty()) continue;
        if (!body.empty()) body += " ";
        body += *part;
      }
      if (out.empty()) out = neg ? "-" + body : body;
      else out += (neg ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Expression parse_expression(std::string_view src, const Chart& chart) {
  Parser parser(src, chart);
  Value v = parser.parse();
  switch (v.kind) {
    case Kind::Scalar: return v.g.coefficient(0).is_zero() ? MultiPoly(chart.size()) : v.g.coefficient(0);
    case Kind::Form: return v.g;
    case Kind::Field: return retag(v.g);
  }
  return MultiPoly(chart.size());
}

MultiPoly parse_polynomial(std::string_view src, const Chart& chart) {
  auto e = parse_expression(src, chart);
  if (auto* p = std::get_if<MultiPoly>(&e)) return *p;
  throw ParseError(0, "expected a polynomial");
}

PolyForm parse_form(std::string_view src, const Chart& chart) {
  auto e = parse_expression(src, chart);
  if (auto* p = std::get_if<MultiPoly>(&e)) return PolyForm::scalar(chart, *p);
  if (auto* f = std::get_if<PolyForm>(&e)) return *f;
  throw ParseError(0, "expected a differential form");
}

PolyMultiVec parse_field(std::string_view src, const Chart& chart) {
  auto e = parse_expression(src, chart);
  if (auto* v = std::get_if<PolyMultiVec>(&e)) return *v;
  if (auto* p = std::get_if<MultiPoly>(&e); p && p->is_zero()) return PolyMultiVec(chart, 1);
  throw ParseError(0, "expected a multivector field");
}

std::string to_string(const MultiPoly& p, const Chart& chart) {
  return format_graded(PolyForm::scalar(chart, p), "d");
}

std::string to_string(const MultiPoly& p) { return to_string(p, Chart::numbered("x", p.nvars())); }

std::string to_string(const PolyForm& a) { return format_graded(a, "d"); }

std::string to_string(const PolyMultiVec& v) { return format_graded(v, "@"); }

std::string to_string(const Expression& e, const Chart& chart) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MultiPoly>) return to_string(x, chart);
        else return to_string(x);
      },
      e);
}

}  // namespace plectic
