#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plectic/linfty.hpp"

namespace plectic {

// A monomial of the reduced symmetric coalgebra on s^{-1}L: generator indices
// in non-decreasing order. Degrees passed alongside are the shifted ones.
using Word = std::vector<int>;
using SymElement = std::map<Word, Rational>;
using TensorElement = std::map<std::vector<Word>, Rational>;

// deg - 1 for every generator.
std::vector<int> shifted_degrees(const GradedSpace& space);

// Sorts gens into canonical order and returns the Koszul sign; 0 when an odd
// generator repeats.
int koszul_sort(Word& gens, std::span<const int> degrees);
void add_word(SymElement& acc, Word gens, const Rational& c, std::span<const int> degrees);
void add_element(SymElement& acc, const Rational& c, const SymElement& x);
bool is_zero(const SymElement& x);
std::string format_word(const Word& w, const GradedSpace& space);
std::string format_element(const SymElement& x, const GradedSpace& space);

// Nonzero canonical words of length 1..max_len.
std::vector<Word> canonical_words(std::span<const int> degrees, int max_len);

// Sum over unshuffles of w into p+1 nonempty blocks with Koszul signs;
// p = 1 is the reduced coproduct and p = 0 the identity.
TensorElement reduced_diagonal(const Word& w, int p, std::span<const int> degrees);
TensorElement reduced_coproduct(const Word& w, std::span<const int> degrees);

// (-1)^{m(m-1)/2} (-1)^{sum_j (m-j)|y_j|}: the sign relating s^{-1} h s^{(x)m}
// to h on generators of shifted degrees |y_1..y_m|.
int shift_sign(std::span<const int> shifted);

// Coderivation built from the brackets of an L-infinity algebra.
class Codifferential {
 public:
  explicit Codifferential(BracketTable brackets);

  const BracketTable& brackets() const { return brackets_; }
  const std::vector<int>& degrees() const { return degrees_; }

  // Q^1_m(w) = (-1)^{m(m-1)/2} s^{-1} l_m s^{(x)m}(w), in coordinates.
  Element projection(const Word& w) const;
  // Q_m(w), all output lengths.
  SymElement apply(const Word& w) const;
  SymElement apply(const SymElement& x) const;

 private:
  BracketTable brackets_;
  std::vector<int> degrees_;
};

// First canonical word of length <= max_len with Q(Q(w)) != 0.
std::optional<std::string> square_violation(const Codifferential& q, int max_len);

// Coalgebra morphism determined by its projections F^1_k onto the cogenerators.
class CoalgebraMap {
 public:
  CoalgebraMap(GradedSpace source, GradedSpace target);

  const GradedSpace& source() const { return source_; }
  const GradedSpace& target() const { return target_; }
  const std::vector<int>& source_degrees() const { return src_deg_; }
  const std::vector<int>& target_degrees() const { return dst_deg_; }

  // F^1 on a word in any order; the value is stored for the canonical order.
  void set(Word w, const Element& value);
  Element projection(const Word& w) const;
  // F^p_n(w): unshuffles into p blocks, epsilon(sigma)/p! times the product of
  // the F^1 images.
  SymElement component(const Word& w, int p) const;
  SymElement apply(const Word& w) const;
  SymElement apply(const SymElement& x) const;

 private:
  GradedSpace source_;
  GradedSpace target_;
  std::vector<int> src_deg_;
  std::vector<int> dst_deg_;
  std::map<Word, Element> values_;
};

// F^1_k = (-1)^{k(k-1)/2} s^{-1} f_k s^{(x)k} for structure maps out of a Lie
// algebra (or a central extension when m.central is set and the source has the
// extra generator last).
CoalgebraMap coalgebra_map(const GradedSpace& source, const TableMorphism& m, const GradedSpace& target);

// F(x_1..x_k) = f(x_1) .. f(x_k) for a linear map given on the basis.
CoalgebraMap strict_coalgebra_map(const GradedSpace& source, const GradedSpace& target,
                                  const std::vector<Element>& images);

// First word of length <= max_len where Delta' F != (F (x) F) Delta.
std::optional<std::string> comorphism_violation(const CoalgebraMap& f, int max_len);

// sum_k F^1_k Q^k_m = sum_k Q'^1_k F^k_m on every canonical word of length m,
// for m = 1..max_len.
CheckReport check_chain_map(const CoalgebraMap& f, const Codifferential& q, const Codifferential& q_prime,
                            int max_len);

}  // namespace plectic
