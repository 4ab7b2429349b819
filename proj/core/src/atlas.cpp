#include "tiltgait/atlas.hpp"

#include <cmath>
#include <sstream>

#include "tiltgait/errors.hpp"
#include "tiltgait/parallel.hpp"

namespace tiltgait {

SurfaceAtlas sweep_grid(const SolverConfig& cfg, const GridSpec& grid,
                        int jobs) {
  if (grid.n < 2) throw std::invalid_argument("sweep_grid: grid.n must be >= 2");

  SurfaceAtlas atlas;
  atlas.grid = grid;
  atlas.points.resize(static_cast<std::size_t>(grid.n) * grid.n);

  parallel_for_index(atlas.points.size(), jobs, [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / grid.n;
    const int j = static_cast<int>(idx) % grid.n;
    AtlasPoint& pt = atlas.points[idx];
    pt.i = i;
    pt.j = j;
    pt.fp = FrontPair(grid.coord(i), grid.coord(j));
    try {
      pt.roots = solve_rear_angles(pt.fp, cfg);
    } catch (const NoConvergence& e) {
      pt.warnings.push_back(std::string("solver: ") + e.what());
      return;
    }
    for (const LabeledRoot& r : pt.roots) {
      if (!RootType::allowed(r.label3, r.label4)) {
        std::ostringstream msg;
        msg << "discrepancy: root (" << r.alpha3 << ", " << r.alpha4
            << ") labeled (" << to_string(r.label3) << ","
            << to_string(r.label4) << ")";
        pt.warnings.push_back(msg.str());
      }
      if (r.branch_lost3 || r.branch_lost4) {
        std::ostringstream msg;
        msg << "branch lost while labeling root (" << r.alpha3 << ", "
            << r.alpha4 << ")";
        pt.warnings.push_back(msg.str());
      }
    }
  });

  return atlas;
}

PaintMap paint_map(const SurfaceAtlas& atlas) {
  PaintMap map;
  map.grid = atlas.grid;
  map.cells.resize(atlas.points.size());
  for (std::size_t idx = 0; idx < atlas.points.size(); ++idx) {
    ColorAvailability& cell = map.cells[idx];
    for (const LabeledRoot& r : atlas.points[idx].roots) {
      if (!(r.r_value < 0.0)) continue;
      if (r.label3 == PlaneLabel::Plus && r.label4 == PlaneLabel::Plus) {
        cell.red = true;
      } else if (r.label3 == PlaneLabel::Minus &&
                 r.label4 == PlaneLabel::Minus) {
        cell.blue = true;
      } else {
        cell.other_negative_types.emplace_back(r.label3, r.label4);
      }
    }
  }
  return map;
}

bool TriangleClaim::contains(double x, double y, double eps) const {
  // consistent-orientation half-plane tests
  double sign = 0.0;
  for (int k = 0; k < 3; ++k) {
    const auto& a = vertices[k];
    const auto& b = vertices[(k + 1) % 3];
    const double cross = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
    if (std::fabs(cross) <= eps) continue;  // on the edge line
    if (sign == 0.0) {
      sign = cross > 0 ? 1.0 : -1.0;
    } else if ((cross > 0 ? 1.0 : -1.0) != sign) {
      return false;
    }
  }
  return true;
}

TriangleClaim claimed_positive_triangle() {
  return TriangleClaim{{{{-7 * kPi / 16, 7 * kPi / 16},
                         {-7 * kPi / 16, -5 * kPi / 16},
                         {5 * kPi / 16, 7 * kPi / 16}}}};
}

TriangleClaim claimed_negative_triangle() {
  return TriangleClaim{{{{-3 * kPi / 8, -3 * kPi / 8},
                         {3 * kPi / 8, 3 * kPi / 8},
                         {3 * kPi / 8, -3 * kPi / 8}}}};
}

TriangleReport triangle_discrepancy(const SurfaceAtlas& atlas) {
  TriangleReport report;
  report.positive_claim = claimed_positive_triangle();
  report.negative_claim = claimed_negative_triangle();

  for (const AtlasPoint& pt : atlas.points) {
    ++report.points_checked;
    bool has_pos = false;
    bool has_neg = false;
    for (const LabeledRoot& r : pt.roots) {
      if (r.r_value > 0.0) has_pos = true;
      if (r.r_value < 0.0) has_neg = true;
    }
    const bool in_pos =
        report.positive_claim.contains(pt.fp.alpha1, pt.fp.alpha2);
    const bool in_neg =
        report.negative_claim.contains(pt.fp.alpha1, pt.fp.alpha2);

    const bool pos_mismatch = has_pos != in_pos;
    const bool neg_mismatch = has_neg != in_neg;
    if (pos_mismatch) ++report.positive_mismatches;
    if (neg_mismatch) ++report.negative_mismatches;
    if (pos_mismatch || neg_mismatch) {
      report.rows.push_back({pt.i, pt.j, pt.fp.alpha1, pt.fp.alpha2, has_pos,
                             in_pos, has_neg, in_neg});
    }
  }
  return report;
}

}  // namespace tiltgait
