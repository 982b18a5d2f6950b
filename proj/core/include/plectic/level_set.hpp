#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plectic/forms.hpp"

namespace plectic {

using Point = std::vector<Rational>;
using Frame = std::vector<std::vector<Rational>>;

// A hypersurface {F = 0} in a coordinate chart, sampled at rational points with
// exact tangent frames.
struct LevelSetChart {
  Chart ambient;
  MultiPoly constraint;
  std::vector<Point> sample_points;
  std::vector<Frame> tangent_frames;
};

// Basis of ker dF|_p; the pivot eliminated is the largest index with nonzero slope.
Frame tangent_frame(const MultiPoly& constraint, const Point& p);

LevelSetChart make_level_set(Chart ambient, MultiPoly constraint, std::vector<Point> points);

// Rational points on the unit sphere in R^{dim}, by stereographic projection of
// small rational vectors drawn from a fixed-seed stream.
std::vector<Point> sphere_points(int ambient_dim, int count, std::uint64_t seed = 0x5eed);

MultiPoly unit_sphere_constraint(int ambient_dim);

struct FrameMismatch {
  std::size_t point_index;
  std::vector<int> frame_tuple;
  Rational residual;
};

std::optional<FrameMismatch> levelset_mismatch(const PolyForm& a, const PolyForm& b, const LevelSetChart& ls);
bool levelset_equal(const PolyForm& a, const PolyForm& b, const LevelSetChart& ls);

// Where identities are decided: exact coefficient equality on a chart, or
// frame sampling on a level set.
class Domain {
 public:
  Domain() = default;
  static Domain chart(Chart c);
  static Domain level_set(LevelSetChart ls);

  bool is_level_set() const { return level_ != nullptr; }
  const Chart& chart() const { return chart_; }
  const LevelSetChart* level() const { return level_.get(); }

  // nullopt when equal on the domain, otherwise a short witness.
  std::optional<std::string> form_difference(const PolyForm& a, const PolyForm& b) const;
  std::optional<std::string> field_difference(const PolyMultiVec& a, const PolyMultiVec& b) const;
  bool forms_equal(const PolyForm& a, const PolyForm& b) const { return !form_difference(a, b); }
  bool form_is_zero(const PolyForm& a) const;

 private:
  Chart chart_;
  std::shared_ptr<const LevelSetChart> level_;
};

}  // namespace plectic
