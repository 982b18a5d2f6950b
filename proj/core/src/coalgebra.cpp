#include "plectic/coalgebra.hpp"

#include <algorithm>
#include <utility>

#include "plectic/combinatorics.hpp"
#include "plectic/error.hpp"

namespace plectic {

namespace {

bool odd(int d) { return (d & 1) != 0; }

// Compositions of n into p positive parts.
void compositions_rec(int n, int p, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (p == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (int k = 1; k <= n - (p - 1); ++k) {
    cur.push_back(k);
    compositions_rec(n - k, p - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (p >= 1 && n >= p) compositions_rec(n, p, cur, out);
  return out;
}

// Blocks of w cut by an unshuffle of the given sizes, with the Koszul sign of the reordering.
struct Split {
  int sign;
  std::vector<Word> blocks;
};

std::vector<Split> splits(const Word& w, const std::vector<int>& sizes, std::span<const int> degrees) {
  std::vector<int> degs;
  for (int g : w) degs.push_back(degrees[g]);
  std::vector<Split> out;
  for (const auto& sigma : unshuffles(sizes)) {
    Split s{koszul_sign(sigma, degs), {}};
    int pos = 1;
    for (int size : sizes) {
      Word block;
      for (int t = 0; t < size; ++t, ++pos) block.push_back(w[sigma(pos) - 1]);
      s.blocks.push_back(std::move(block));
    }
    out.push_back(std::move(s));
  }
  return out;
}

Element zero_element(int dim) { return Element(dim, Rational(0)); }

bool element_is_zero(const Element& e) {
  return std::all_of(e.begin(), e.end(), [](const Rational& r) { return is_zero(r); });
}

void add_tensor(TensorElement& acc, std::vector<Word> key, const Rational& c) {
  if (is_zero(c)) return;
  auto& slot = acc[std::move(key)];
  slot += c;
}

void prune(TensorElement& t) {
  std::erase_if(t, [](const auto& kv) { return is_zero(kv.second); });
}

// c * e_{t_1} .. e_{t_p} summed over coordinates of the given elements.
void add_product(SymElement& acc, const std::vector<Element>& factors, const Rational& c,
                 std::span<const int> degrees) {
  Word gens(factors.size());
  auto rec = [&](auto&& self, std::size_t pos, const Rational& coeff) -> void {
    if (pos == factors.size()) {
      add_word(acc, gens, coeff, degrees);
      return;
    }
    for (std::size_t t = 0; t < factors[pos].size(); ++t) {
      if (is_zero(factors[pos][t])) continue;
      gens[pos] = static_cast<int>(t);
      self(self, pos + 1, coeff * factors[pos][t]);
    }
  };
  rec(rec, 0, c);
}

std::string format_elem(const Element& e, const GradedSpace& space) {
  std::string out;
  for (int t = 0; t < static_cast<int>(e.size()); ++t) {
    if (is_zero(e[t])) continue;
    out += (out.empty() ? "" : " + ") + to_string(e[t]) + " " + space.names[t];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::vector<int> shifted_degrees(const GradedSpace& space) {
  std::vector<int> out;
  for (int d : space.degrees) out.push_back(d - 1);
  return out;
}

int koszul_sort(Word& gens, std::span<const int> degrees) {
  int sign = 1;
  for (std::size_t i = 1; i < gens.size(); ++i)
    for (std::size_t j = i; j > 0 && gens[j - 1] > gens[j]; --j) {
      if (odd(degrees[gens[j - 1]]) && odd(degrees[gens[j]])) sign = -sign;
      std::swap(gens[j - 1], gens[j]);
    }
  for (std::size_t i = 1; i < gens.size(); ++i)
    if (gens[i] == gens[i - 1] && odd(degrees[gens[i]])) return 0;
  return sign;
}

void add_word(SymElement& acc, Word gens, const Rational& c, std::span<const int> degrees) {
  if (is_zero(c)) return;
  const int s = koszul_sort(gens, degrees);
  if (s == 0) return;
  auto it = acc.find(gens);
  if (it == acc.end()) {
    acc.emplace(std::move(gens), s * c);
    return;
  }
  it->second += s * c;
  if (is_zero(it->second)) acc.erase(it);
}

void add_element(SymElement& acc, const Rational& c, const SymElement& x) {
  if (is_zero(c)) return;
  for (const auto& [w, v] : x) {
    auto& slot = acc[w];
    slot += c * v;
    if (is_zero(slot)) acc.erase(w);
  }
}

bool is_zero(const SymElement& x) { return x.empty(); }

std::string format_word(const Word& w, const GradedSpace& space) {
  std::string out;
  for (int g : w) out += (out.empty() ? "" : ".") + space.names[g];
  return out;
}

std::string format_element(const SymElement& x, const GradedSpace& space) {
  std::string out;
  for (const auto& [w, c] : x) out += (out.empty() ? "" : " + ") + to_string(c) + " " + format_word(w, space);
  return out.empty() ? "0" : out;
}

std::vector<Word> canonical_words(std::span<const int> degrees, int max_len) {
  std::vector<Word> out;
  const int dim = static_cast<int>(degrees.size());
  for (int len = 1; len <= max_len; ++len)
    for (auto w : multisets(dim, len)) {
      Word probe = w;
      if (koszul_sort(probe, degrees) != 0) out.push_back(std::move(w));
    }
  return out;
}

TensorElement reduced_diagonal(const Word& w, int p, std::span<const int> degrees) {
  if (p < 0) throw Error(ErrorKind::InvalidInput, "reduced diagonal needs p >= 0");
  TensorElement out;
  if (p == 0) {
    Word sorted = w;
    const int s = koszul_sort(sorted, degrees);
    add_tensor(out, {sorted}, Rational(s));
    return out;
  }
  for (const auto& sizes : compositions(static_cast<int>(w.size()), p + 1))
    for (auto& s : splits(w, sizes, degrees)) add_tensor(out, std::move(s.blocks), Rational(s.sign));
  prune(out);
  return out;
}

TensorElement reduced_coproduct(const Word& w, std::span<const int> degrees) { return reduced_diagonal(w, 1, degrees); }

int shift_sign(std::span<const int> shifted) {
  const int m = static_cast<int>(shifted.size());
  int e = m * (m - 1) / 2;
  for (int j = 0; j < m; ++j) e += (m - 1 - j) * shifted[j];
  return (e % 2 + 2) % 2 ? -1 : 1;
}

Codifferential::Codifferential(BracketTable brackets)
    : brackets_(std::move(brackets)), degrees_(shifted_degrees(brackets_.space())) {}

Element Codifferential::projection(const Word& w) const {
  std::vector<int> shifted;
  for (int g : w) shifted.push_back(degrees_[g]);
  Element out = brackets_.bracket_basis(w);
  if (shift_sign(shifted) < 0)
    for (auto& c : out) c = -c;
  return out;
}

SymElement Codifferential::apply(const Word& w) const {
  const int m = static_cast<int>(w.size());
  SymElement out;
  add_product(out, {projection(w)}, Rational(1), degrees_);
  for (int i = 1; i < m; ++i)
    for (const auto& s : splits(w, {i, m - i}, degrees_)) {
      Element head = projection(s.blocks[0]);
      if (element_is_zero(head)) continue;
      for (int t = 0; t < static_cast<int>(head.size()); ++t) {
        if (is_zero(head[t])) continue;
        Word gens{t};
        gens.insert(gens.end(), s.blocks[1].begin(), s.blocks[1].end());
        add_word(out, std::move(gens), s.sign * head[t], degrees_);
      }
    }
  return out;
}

SymElement Codifferential::apply(const SymElement& x) const {
  SymElement out;
  for (const auto& [w, c] : x) add_element(out, c, apply(w));
  return out;
}

std::optional<std::string> square_violation(const Codifferential& q, int max_len) {
  for (const auto& w : canonical_words(q.degrees(), max_len)) {
    SymElement qq = q.apply(q.apply(w));
    if (!qq.empty())
      return "Q(Q(" + format_word(w, q.brackets().space()) + ")) = " + format_element(qq, q.brackets().space());
  }
  return std::nullopt;
}

CoalgebraMap::CoalgebraMap(GradedSpace source, GradedSpace target)
    : source_(std::move(source)),
      target_(std::move(target)),
      src_deg_(shifted_degrees(source_)),
      dst_deg_(shifted_degrees(target_)) {}

void CoalgebraMap::set(Word w, const Element& value) {
  const int s = koszul_sort(w, src_deg_);
  if (s == 0) {
    if (!element_is_zero(value)) throw Error(ErrorKind::NotSkew, "value on a vanishing word");
    return;
  }
  Element v = value;
  v.resize(target_.dim(), Rational(0));
  if (s < 0)
    for (auto& c : v) c = -c;
  if (element_is_zero(v)) values_.erase(w);
  else values_[std::move(w)] = std::move(v);
}

Element CoalgebraMap::projection(const Word& w) const {
  Word sorted = w;
  const int s = koszul_sort(sorted, src_deg_);
  auto it = values_.find(sorted);
  if (s == 0 || it == values_.end()) return zero_element(target_.dim());
  Element out = it->second;
  if (s < 0)
    for (auto& c : out) c = -c;
  return out;
}

SymElement CoalgebraMap::component(const Word& w, int p) const {
  SymElement out;
  const int n = static_cast<int>(w.size());
  if (p < 1 || p > n) return out;
  const Rational scale = Rational(1) / factorial(p);
  for (const auto& sizes : compositions(n, p))
    for (const auto& s : splits(w, sizes, src_deg_)) {
      std::vector<Element> images;
      bool vanishes = false;
      for (const auto& block : s.blocks) {
        images.push_back(projection(block));
        if (element_is_zero(images.back())) {
          vanishes = true;
          break;
        }
      }
      if (!vanishes) add_product(out, images, s.sign * scale, dst_deg_);
    }
  return out;
}

SymElement CoalgebraMap::apply(const Word& w) const {
  SymElement out;
  for (int p = 1; p <= static_cast<int>(w.size()); ++p) add_element(out, Rational(1), component(w, p));
  return out;
}

SymElement CoalgebraMap::apply(const SymElement& x) const {
  SymElement out;
  for (const auto& [w, c] : x) add_element(out, c, apply(w));
  return out;
}

CoalgebraMap coalgebra_map(const GradedSpace& source, const TableMorphism& m, const GradedSpace& target) {
  CoalgebraMap out(source, target);
  const auto& degs = out.source_degrees();
  for (int k = 1; k <= static_cast<int>(m.f.size()); ++k)
    for (const auto& [key, value] : m.component(k).values()) {
      Word w = indices_of(key);
      std::vector<int> shifted;
      for (int g : w) shifted.push_back(degs[g]);
      Element v = value;
      if (shift_sign(shifted) < 0)
        for (auto& c : v) c = -c;
      out.set(std::move(w), v);
    }
  if (m.central) {
    if (source.dim() != m.component(1).dim() + 1)
      throw Error(ErrorKind::SizeMismatch, "the central generator must be the last source generator");
    out.set({source.dim() - 1}, *m.central);
  }
  return out;
}

CoalgebraMap strict_coalgebra_map(const GradedSpace& source, const GradedSpace& target,
                                  const std::vector<Element>& images) {
  if (static_cast<int>(images.size()) != source.dim())
    throw Error(ErrorKind::SizeMismatch, "one image per source generator");
  CoalgebraMap out(source, target);
  for (int i = 0; i < source.dim(); ++i) out.set({i}, images[i]);
  return out;
}

std::optional<std::string> comorphism_violation(const CoalgebraMap& f, int max_len) {
  const auto& src = f.source_degrees();
  const auto& dst = f.target_degrees();
  for (const auto& w : canonical_words(src, max_len)) {
    TensorElement lhs;
    for (const auto& [u, c] : f.apply(w))
      for (const auto& [key, d] : reduced_coproduct(u, dst)) add_tensor(lhs, key, c * d);
    TensorElement rhs;
    for (const auto& [key, c] : reduced_coproduct(w, src)) {
      SymElement a = f.apply(key[0]);
      SymElement b = f.apply(key[1]);
      for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) add_tensor(rhs, {wa, wb}, c * ca * cb);
    }
    prune(lhs);
    prune(rhs);
    if (lhs != rhs) return "word " + format_word(w, f.source());
  }
  return std::nullopt;
}

CheckReport check_chain_map(const CoalgebraMap& f, const Codifferential& q, const Codifferential& q_prime,
                            int max_len) {
  CheckReport report;
  report.title = "chain map";
  const int dim = f.target().dim();
  auto words = canonical_words(f.source_degrees(), max_len);
  for (int m = 1; m <= max_len; ++m) {
    std::string witness;
    for (const auto& w : words) {
      if (static_cast<int>(w.size()) != m) continue;
      Element lhs = zero_element(dim), rhs = zero_element(dim);
      for (const auto& [u, c] : q.apply(w)) add_scaled(lhs, c, f.projection(u));
      for (const auto& [u, c] : f.apply(w)) add_scaled(rhs, c, q_prime.projection(u));
      Element diff = lhs;
      add_scaled(diff, Rational(-1), rhs);
      if (!element_is_zero(diff)) {
        witness = format_word(w, f.source()) + ": FQ - Q'F = " + format_elem(diff, f.target());
        break;
      }
    }
    report.add("FQ = Q'F m=" + std::to_string(m), witness.empty(), witness);
  }
  return report;
}

}  // namespace plectic
