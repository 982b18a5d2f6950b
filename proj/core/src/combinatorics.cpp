#include "plectic/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "plectic/error.hpp"

namespace plectic {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v]) throw Error(ErrorKind::InvalidInput, "not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

int Permutation::sign() const {
  int s = 1;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (images_[i] > images_[j]) s = -s;
  return s;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw Error(ErrorKind::SizeMismatch, "permutation sizes differ");
  std::vector<int> im(images_.size());
  for (int i = 1; i <= size(); ++i) im[i - 1] = (*this)(next(i));
  return Permutation(std::move(im));
}

std::string Permutation::cycle_notation() const {
  std::string out;
  std::vector<bool> done(images_.size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (done[start] || (*this)(start) == start) continue;
    out += "(";
    int i = start;
    while (!done[i]) {
      done[i] = true;
      out += std::to_string(i);
      i = (*this)(i);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

int koszul_sign(const Permutation& sigma, std::span<const int> degrees) {
  if (static_cast<int>(degrees.size()) != sigma.size())
    throw Error(ErrorKind::SizeMismatch, "degree list does not match permutation size");
  int s = 1;
  const int n = sigma.size();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      int i = sigma(a), j = sigma(b);
      if (i > j && (degrees[i - 1] & 1) && (degrees[j - 1] & 1)) s = -s;
    }
  }
  return s;
}

std::vector<int> permute(std::span<const int> values, const Permutation& sigma) {
  if (static_cast<int>(values.size()) != sigma.size())
    throw Error(ErrorKind::SizeMismatch, "value list does not match permutation size");
  std::vector<int> out(values.size());
  for (int i = 1; i <= sigma.size(); ++i) out[i - 1] = values[sigma(i) - 1];
  return out;
}

namespace {

// Assign positions 1..n to blocks so that each block's positions ascend.
void unshuffle_rec(std::span<const int> sizes, std::vector<int>& fill, std::vector<int>& block_of,
                   int position, int n, std::vector<Permutation>& out) {
  if (position > n) {
    std::vector<int> starts(sizes.size() + 1, 0);
    for (std::size_t b = 0; b < sizes.size(); ++b) starts[b + 1] = starts[b] + sizes[b];
    std::vector<int> images(n);
    std::vector<int> cursor(starts.begin(), starts.end() - 1);
    for (int p = 1; p <= n; ++p) images[cursor[block_of[p - 1]]++] = p;
    out.emplace_back(std::move(images));
    return;
  }
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    if (fill[b] == sizes[b]) continue;
    ++fill[b];
    block_of[position - 1] = static_cast<int>(b);
    unshuffle_rec(sizes, fill, block_of, position + 1, n, out);
    --fill[b];
  }
}

}  // namespace

std::vector<Permutation> unshuffles(std::span<const int> block_sizes) {
  int n = 0;
  for (int s : block_sizes) {
    if (s < 0) throw Error(ErrorKind::InvalidInput, "negative block size");
    n += s;
  }
  std::vector<int> fill(block_sizes.size(), 0), block_of(n, 0);
  std::vector<Permutation> out;
  unshuffle_rec(block_sizes, fill, block_of, 1, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

int varsigma(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidInput, "varsigma needs k >= 1");
  long t = static_cast<long>(k) * (k + 1) / 2;
  return (t % 2 == 0) ? -1 : 1;
}

std::vector<std::vector<int>> increasing_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    int p = k - 1;
    while (p >= 0 && idx[p] == n - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

std::vector<std::vector<int>> multisets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || n <= 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  std::vector<int> idx(k, 0);
  while (true) {
    out.push_back(idx);
    int p = k - 1;
    while (p >= 0 && idx[p] == n - 1) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[p];
  }
  return out;
}

int sort_sign(std::vector<int>& idx) {
  int s = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      s = -s;
    }
  }
  return s;
}

MultilinearTable::MultilinearTable(int dim, int arity) : dim_(dim), arity_(arity) {
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(dim);
  values_.assign(n, Rational(0));
}

std::size_t MultilinearTable::offset(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != arity_) throw Error(ErrorKind::SizeMismatch, "table arity mismatch");
  std::size_t off = 0;
  for (int i : idx) off = off * dim_ + i;
  return off;
}

MultilinearTable MultilinearTable::tensor_product(const MultilinearTable& a, const MultilinearTable& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorKind::SizeMismatch, "tensor factors over different spaces");
  MultilinearTable out(a.dim_, a.arity_ + b.arity_);
  out.for_each_index([&](std::span<const int> idx) {
    out.at(idx) = a.at(idx.first(a.arity_)) * b.at(idx.subspan(a.arity_));
  });
  return out;
}

MultilinearTable alt_k(const MultilinearTable& t) {
  const int k = t.arity();
  auto perms = all_permutations(k);
  MultilinearTable out(t.dim(), k);
  Rational inv = 1 / factorial(k);
  std::vector<int> moved(k);
  t.for_each_index([&](std::span<const int> idx) {
    Rational sum = 0;
    for (const auto& p : perms) {
      for (int i = 0; i < k; ++i) moved[i] = idx[p(i + 1) - 1];
      if (p.sign() > 0) sum += t.at(moved);
      else sum -= t.at(moved);
    }
    out.at(idx) = sum * inv;
  });
  return out;
}

}  // namespace plectic
