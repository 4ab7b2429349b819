#include "tiltgait/attitude_map.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "tiltgait/marching_squares.hpp"
#include "tiltgait/parallel.hpp"
#include "tiltgait/singularity.hpp"

namespace tiltgait {

void AttitudeGrid::validate() const {
  if (resolution < 3 || resolution % 2 == 0) {
    throw std::invalid_argument(
        "AttitudeGrid: resolution must be odd and >= 3");
  }
  if (!(margin >= 0.0) || margin >= kHalfPi) {
    throw std::invalid_argument("AttitudeGrid: bad margin");
  }
}

std::size_t ContourSet::total_points() const {
  std::size_t n = 0;
  for (const TaggedPolyline& p : polylines) n += p.line.points.size();
  return n;
}

bool margin_at_least(const RobustnessMargin& a, const RobustnessMargin& b) {
  if (a.unbounded()) return true;
  if (b.unbounded()) return false;
  return *a.value >= *b.value;
}

bool margin_greater(const RobustnessMargin& a, const RobustnessMargin& b) {
  if (a.unbounded()) return !b.unbounded();
  if (b.unbounded()) return false;
  return *a.value > *b.value;
}

namespace {

// x axis is roll, y axis is pitch
ScalarGrid evaluate_field(const GaitTrig& trig, const AttitudeGrid& grid) {
  const int n = grid.resolution;
  std::vector<double> sines(n), cosines(n);
  for (int k = 0; k < n; ++k) {
    const double a = grid.coord(k);
    sines[k] = std::sin(a);
    cosines[k] = std::cos(a);
  }
  ScalarGrid field;
  field.nx = n;
  field.ny = n;
  field.x0 = grid.lo();
  field.y0 = grid.lo();
  field.dx = grid.spacing();
  field.dy = grid.spacing();
  field.values.resize(static_cast<std::size_t>(n) * n);
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const AttitudeTrig at(sines[ix], cosines[ix], sines[iy], cosines[iy]);
      field.values[static_cast<std::size_t>(iy) * n + ix] =
          eval_full_condition(trig, at);
    }
  }
  return field;
}

ContourSet locus_of_trig(const GaitTrig& trig, const AttitudeGrid& grid,
                         int t_index) {
  ContourSet set;
  set.grid_resolution = grid.resolution;
  std::vector<MsPolyline> lines = extract_zero_contours(evaluate_field(trig, grid));
  set.polylines.reserve(lines.size());
  for (std::size_t k = 0; k < lines.size(); ++k) {
    TaggedPolyline tp;
    tp.t_index = t_index;
    tp.polyline_id = static_cast<int>(k);
    tp.line.closed = lines[k].closed;
    tp.line.points.reserve(lines[k].points.size());
    for (const auto& p : lines[k].points) {
      tp.line.points.emplace_back(p[0], p[1]);
    }
    set.polylines.push_back(std::move(tp));
  }
  return set;
}

}  // namespace

ContourSet singular_locus(const GaitPoint& g, const AttitudeGrid& grid) {
  grid.validate();
  ContourSet set = locus_of_trig(GaitTrig(g), grid, 0);
  set.source = "sample";
  set.time_samples = 1;
  return set;
}

ContourSet gait_singular_union(const Gait& g, int time_samples,
                               const AttitudeGrid& grid, int jobs) {
  grid.validate();
  if (time_samples < 1) {
    throw std::invalid_argument(
        "gait_singular_union: time_samples must be >= 1");
  }
  if (g.samples.empty()) {
    throw std::invalid_argument("gait_singular_union: gait has no samples");
  }

  // evenly spread sample indices, each used at most once
  std::vector<int> indices;
  const int n = static_cast<int>(g.samples.size());
  for (int k = 0; k < time_samples; ++k) {
    const int idx =
        static_cast<int>(static_cast<std::int64_t>(k) * n / time_samples);
    if (indices.empty() || indices.back() != idx) indices.push_back(idx);
  }

  std::vector<ContourSet> per_sample(indices.size());
  parallel_for_index(indices.size(), jobs, [&](std::size_t k) {
    const GaitTrig trig(g.samples[indices[k]].point);
    per_sample[k] = locus_of_trig(trig, grid, indices[k]);
  });

  ContourSet out;
  out.gait_name = g.name;
  out.source = "union";
  out.grid_resolution = grid.resolution;
  out.time_samples = static_cast<int>(indices.size());
  for (ContourSet& cs : per_sample) {
    for (TaggedPolyline& p : cs.polylines) {
      out.polylines.push_back(std::move(p));
    }
  }
  return out;
}

RobustnessMargin robustness_margin(const ContourSet& contours) {
  RobustnessMargin margin;
  for (const TaggedPolyline& p : contours.polylines) {
    for (const Attitude& a : p.line.points) {
      const double d = std::hypot(a.phi, a.theta);
      if (!margin.value || d < *margin.value) {
        margin.value = d;
        margin.attained_at = a;
      }
    }
  }
  return margin;
}

GaitComparison compare_gaits(const Gait& a, const Gait& b,
                             const AttitudeGrid& grid, int time_samples,
                             int jobs) {
  GaitComparison cmp;
  cmp.contours_a = gait_singular_union(a, time_samples, grid, jobs);
  cmp.contours_b = gait_singular_union(b, time_samples, grid, jobs);
  cmp.margin_a = robustness_margin(cmp.contours_a);
  cmp.margin_b = robustness_margin(cmp.contours_b);
  if (cmp.margin_a.unbounded() && cmp.margin_b.unbounded()) {
    cmp.difference = 0.0;
  } else if (!cmp.margin_a.unbounded() && !cmp.margin_b.unbounded()) {
    cmp.difference = *cmp.margin_a.value - *cmp.margin_b.value;
  }
  return cmp;
}

}  // namespace tiltgait
