#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tiltgait/colormap.hpp"
#include "tiltgait/solver.hpp"

namespace tiltgait {

// Even grid over [-pi/2, pi/2] per axis: coord(i) = -pi/2 + i * spacing.
struct GridSpec {
  int n = 17;

  double spacing() const { return kPi / (n - 1); }
  double coord(int idx) const { return -kHalfPi + idx * spacing(); }
};

struct AtlasPoint {
  int i = 0;  // alpha1 index
  int j = 0;  // alpha2 index
  FrontPair fp;
  std::vector<LabeledRoot> roots;      // lexicographic by (alpha3, alpha4)
  std::vector<std::string> warnings;   // per-point solver annotations

  int root_count() const { return static_cast<int>(roots.size()); }
};

struct SurfaceAtlas {
  GridSpec grid;
  std::vector<AtlasPoint> points;  // row-major, index = i * grid.n + j

  const AtlasPoint& at(int i, int j) const { return points[i * grid.n + j]; }
};

// Solves, labels and signs every grid point. Per-point solver failures are
// recorded as warnings, never abort the sweep. Output is identical for any
// worker count.
SurfaceAtlas sweep_grid(const SolverConfig& cfg = {}, const GridSpec& grid = {},
                        int jobs = 1);

// Which colors (branch picks with r < 0) are available at a grid point.
// Types other than (+,+)/(-,-) among the negative-r roots are carried
// through verbatim.
struct ColorAvailability {
  bool red = false;
  bool blue = false;
  std::vector<std::pair<PlaneLabel, PlaneLabel>> other_negative_types;
};

struct PaintMap {
  GridSpec grid;
  std::vector<ColorAvailability> cells;  // same indexing as the atlas

  const ColorAvailability& at(int i, int j) const {
    return cells[i * grid.n + j];
  }
};

PaintMap paint_map(const SurfaceAtlas& atlas);

// A claimed triangular region of the (alpha1, alpha2) plane.
struct TriangleClaim {
  std::array<std::array<double, 2>, 3> vertices;

  // closed-triangle membership with tolerance eps on the edge tests
  bool contains(double x, double y, double eps = 1e-9) const;
};

// Printed claims about where positive-r and negative-r roots project.
TriangleClaim claimed_positive_triangle();
TriangleClaim claimed_negative_triangle();

struct TriangleMismatchRow {
  int i, j;
  double alpha1, alpha2;
  bool has_positive_root;
  bool inside_positive_triangle;
  bool has_negative_root;
  bool inside_negative_triangle;
};

// Comparison of the computed sign distribution against the claimed
// triangles. Rows hold every grid point where a claim and the computation
// disagree; the claims are reported, not enforced.
struct TriangleReport {
  TriangleClaim positive_claim;
  TriangleClaim negative_claim;
  int points_checked = 0;
  int positive_mismatches = 0;
  int negative_mismatches = 0;
  std::vector<TriangleMismatchRow> rows;
};

TriangleReport triangle_discrepancy(const SurfaceAtlas& atlas);

}  // namespace tiltgait
