#include "plectic/level_set.hpp"

#include <random>

#include "plectic/combinatorics.hpp"
#include "plectic/expression.hpp"

namespace plectic {

Frame tangent_frame(const MultiPoly& constraint, const Point& p) {
  const int n = constraint.nvars();
  std::vector<Rational> grad(n);
  for (int i = 0; i < n; ++i) grad[i] = constraint.derivative(i).evaluate(p);
  int pivot = -1;
  for (int i = n - 1; i >= 0; --i)
    if (!is_zero(grad[i])) {
      pivot = i;
      break;
    }
  if (pivot < 0) throw Error(ErrorKind::InvalidInput, "constraint is singular at a sample point");
  Frame frame;
  for (int j = 0; j < n; ++j) {
    if (j == pivot) continue;
    std::vector<Rational> v(n, Rational(0));
    v[j] = 1;
    v[pivot] = -grad[j] / grad[pivot];
    frame.push_back(std::move(v));
  }
  return frame;
}

LevelSetChart make_level_set(Chart ambient, MultiPoly constraint, std::vector<Point> points) {
  if (constraint.nvars() != ambient.size()) throw Error(ErrorKind::ChartMismatch, "constraint over wrong chart");
  LevelSetChart ls{std::move(ambient), std::move(constraint), {}, {}};
  for (auto& p : points) {
    if (!is_zero(ls.constraint.evaluate(p)))
      throw Error(ErrorKind::InvalidInput, "sample point " + to_string(p) + " is off the level set");
    ls.tangent_frames.push_back(tangent_frame(ls.constraint, p));
    ls.sample_points.push_back(std::move(p));
  }
  return ls;
}

std::vector<Point> sphere_points(int ambient_dim, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> out;
  const int m = ambient_dim - 1;
  // The numerator range grows on every duplicate so small spheres cannot run dry.
  long spread = 4;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Rational> t(m);
    Rational norm2 = 0;
    for (int i = 0; i < m; ++i) {
      long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * spread + 1)) - spread;
      long den = static_cast<long>(rng() % 3) + 1;
      t[i] = make_rational(num, den);
      norm2 += t[i] * t[i];
    }
    Point x(ambient_dim);
    Rational inv = 1 / (norm2 + 1);
    for (int i = 0; i < m; ++i) x[i] = 2 * t[i] * inv;
    x[m] = (norm2 - 1) * inv;
    bool duplicate = false;
    for (const auto& q : out) duplicate = duplicate || q == x;
    if (duplicate) ++spread;
    else out.push_back(std::move(x));
  }
  return out;
}

MultiPoly unit_sphere_constraint(int ambient_dim) {
  MultiPoly f = MultiPoly::constant(ambient_dim, -1);
  for (int i = 0; i < ambient_dim; ++i) {
    Exponents e{};
    e[i] = 2;
    f.add_term(e, 1);
  }
  return f;
}

std::optional<FrameMismatch> levelset_mismatch(const PolyForm& a, const PolyForm& b, const LevelSetChart& ls) {
  PolyForm diff = a - b;
  if (diff.is_zero()) return std::nullopt;
  const int k = diff.degree();
  const int dim = ls.ambient.size() - 1;
  auto tuples = increasing_subsets(dim, k);
  for (std::size_t pi = 0; pi < ls.sample_points.size(); ++pi) {
    const auto& frame = ls.tangent_frames[pi];
    for (const auto& tuple : tuples) {
      Frame vecs;
      for (int t : tuple) vecs.push_back(frame[t]);
      Rational r = evaluate_on_frame(diff, ls.sample_points[pi], vecs);
      if (!is_zero(r)) return FrameMismatch{pi, tuple, r};
    }
  }
  return std::nullopt;
}

bool levelset_equal(const PolyForm& a, const PolyForm& b, const LevelSetChart& ls) {
  return !levelset_mismatch(a, b, ls);
}

Domain Domain::chart(Chart c) {
  Domain d;
  d.chart_ = std::move(c);
  return d;
}

Domain Domain::level_set(LevelSetChart ls) {
  Domain d;
  d.chart_ = ls.ambient;
  d.level_ = std::make_shared<const LevelSetChart>(std::move(ls));
  return d;
}

std::optional<std::string> Domain::form_difference(const PolyForm& a, const PolyForm& b) const {
  if (!level_) {
    if (a == b) return std::nullopt;
    return "residual " + to_string(a - b);
  }
  auto m = levelset_mismatch(a, b, *level_);
  if (!m) return std::nullopt;
  std::string tuple;
  for (int t : m->frame_tuple) tuple += (tuple.empty() ? "" : ",") + std::to_string(t);
  return "point " + to_string(level_->sample_points[m->point_index]) + " frame (" + tuple + ") residual " +
         to_string(m->residual);
}

std::optional<std::string> Domain::field_difference(const PolyMultiVec& a, const PolyMultiVec& b) const {
  if (!level_) {
    if (a == b) return std::nullopt;
    return "residual " + to_string(a - b);
  }
  PolyMultiVec diff = a - b;
  for (const auto& p : level_->sample_points) {
    auto v = evaluate_field(diff, p);
    for (const auto& c : v)
      if (!is_zero(c)) return "point " + to_string(p) + " field residual " + to_string(v);
  }
  return std::nullopt;
}

bool Domain::form_is_zero(const PolyForm& a) const { return forms_equal(a, PolyForm(a.chart(), a.degree())); }

}  // namespace plectic
