#pragma once

#include <span>
#include <string>
#include <vector>

#include "plectic/rational.hpp"

namespace plectic {

// A permutation of {1..n}, stored as its images sigma(1)..sigma(n).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  int sign() const;
  Permutation inverse() const;
  // Rearrange by *this first and then by next: i -> (*this)(next(i)).
  Permutation then(const Permutation& next) const;
  std::string cycle_notation() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Sign epsilon(sigma) defined by x_1...x_n = epsilon x_sigma(1)...x_sigma(n) in the
// free graded-commutative algebra; excludes (-1)^sigma.
int koszul_sign(const Permutation& sigma, std::span<const int> degrees);

// (d_sigma(1), ..., d_sigma(n)).
std::vector<int> permute(std::span<const int> values, const Permutation& sigma);

std::vector<Permutation> unshuffles(std::span<const int> block_sizes);
std::vector<Permutation> all_permutations(int n);

int varsigma(int k);

// Strictly increasing k-subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> increasing_subsets(int n, int k);
// Non-decreasing k-sequences of {0..n-1}, lexicographic.
std::vector<std::vector<int>> multisets(int n, int k);
// Sign of the permutation sorting idx ascending; 0 if idx has a repeat.
int sort_sign(std::vector<int>& idx);

// Dense multilinear scalar table on g^{(x)k}, index (i_1..i_k) in base dim.
class MultilinearTable {
 public:
  MultilinearTable(int dim, int arity);

  int dim() const { return dim_; }
  int arity() const { return arity_; }
  const Rational& at(std::span<const int> idx) const { return values_[offset(idx)]; }
  Rational& at(std::span<const int> idx) { return values_[offset(idx)]; }
  const std::vector<Rational>& values() const { return values_; }

  bool operator==(const MultilinearTable&) const = default;

  template <class F>
  void for_each_index(F&& f) const {
    std::vector<int> idx(arity_, 0);
    for (std::size_t flat = 0; flat < values_.size(); ++flat) {
      f(std::span<const int>(idx));
      for (int p = arity_ - 1; p >= 0; --p) {
        if (++idx[p] < dim_) break;
        idx[p] = 0;
      }
    }
  }

  static MultilinearTable tensor_product(const MultilinearTable& a, const MultilinearTable& b);

 private:
  std::size_t offset(std::span<const int> idx) const;
  int dim_;
  int arity_;
  std::vector<Rational> values_;
};

// (1/k!) sum_sigma (-1)^sigma t(x_sigma(1), ..., x_sigma(k)).
MultilinearTable alt_k(const MultilinearTable& t);

}  // namespace plectic
