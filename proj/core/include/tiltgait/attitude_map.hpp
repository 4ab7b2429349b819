#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltgait/gait.hpp"
#include "tiltgait/types.hpp"

namespace tiltgait {

// Discretization of the roll-pitch square. The domain is inset by `margin`
// so the closed grid never touches +-pi/2, matching the open analysis
// domain. Resolution must be odd so the origin is a grid node.
struct AttitudeGrid {
  int resolution = 401;
  double margin = 1e-6;

  void validate() const;
  double lo() const { return -kHalfPi + margin; }
  double hi() const { return kHalfPi - margin; }
  double spacing() const { return (hi() - lo()) / (resolution - 1); }
  double coord(int idx) const { return lo() + idx * spacing(); }
};

struct Polyline {
  std::vector<Attitude> points;
  bool closed = false;
};

struct TaggedPolyline {
  int t_index = 0;      // gait time sample the polyline came from
  int polyline_id = 0;  // stable id within that sample
  Polyline line;
};

// Zero-level curves of the singularity condition over the attitude square.
struct ContourSet {
  std::string gait_name;
  std::string source;  // "sample" or "union"
  int grid_resolution = 0;
  int time_samples = 0;
  std::vector<TaggedPolyline> polylines;

  bool empty() const { return polylines.empty(); }
  std::size_t total_points() const;
};

// Minimum attitude excursion that reaches a singular attitude. Unbounded
// (no value) when the contour set is empty on the domain.
struct RobustnessMargin {
  std::optional<double> value;
  std::optional<Attitude> attained_at;

  bool unbounded() const { return !value.has_value(); }
};

// a >= b / a > b with Unbounded ordered above every finite margin.
bool margin_at_least(const RobustnessMargin& a, const RobustnessMargin& b);
bool margin_greater(const RobustnessMargin& a, const RobustnessMargin& b);

// Marching-squares extraction of the singular attitudes of one gait point.
ContourSet singular_locus(const GaitPoint& g, const AttitudeGrid& grid = {});

// Union of per-sample loci over the gait period. time_samples gait points
// are taken evenly from the gait's sample list.
ContourSet gait_singular_union(const Gait& g, int time_samples = 64,
                               const AttitudeGrid& grid = {}, int jobs = 1);

RobustnessMargin robustness_margin(const ContourSet& contours);

struct GaitComparison {
  RobustnessMargin margin_a;
  RobustnessMargin margin_b;
  // margin_a - margin_b; 0 when both unbounded, absent when exactly one is
  std::optional<double> difference;
  ContourSet contours_a;
  ContourSet contours_b;
};

GaitComparison compare_gaits(const Gait& a, const Gait& b,
                             const AttitudeGrid& grid = {},
                             int time_samples = 64, int jobs = 1);

}  // namespace tiltgait
