#pragma once

#include <array>
#include <vector>

// Generic zero-level contour extraction on a regular 2-D grid: classic
// marching squares with linear interpolation along cell edges. Saddle cells
// are disambiguated by the sign of the cell-center average. Output is
// canonicalized (stable point order, stable polyline order) so identical
// fields produce identical bytes downstream.

namespace tiltgait {

struct ScalarGrid {
  int nx = 0;
  int ny = 0;
  double x0 = 0.0;
  double y0 = 0.0;
  double dx = 1.0;
  double dy = 1.0;
  std::vector<double> values;  // [iy * nx + ix]

  double at(int ix, int iy) const { return values[iy * nx + ix]; }
};

struct MsPolyline {
  std::vector<std::array<double, 2>> points;
  bool closed = false;
};

std::vector<MsPolyline> extract_zero_contours(const ScalarGrid& grid);

}  // namespace tiltgait
