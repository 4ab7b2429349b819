#include "tiltgait/marching_squares.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace tiltgait {

namespace {

using Point = std::array<double, 2>;

// Edge of the node grid: starts at node (ix, iy), going +x (vertical ==
// false) or +y (vertical == true).
std::int64_t edge_id(int ix, int iy, bool vertical, int nx) {
  return (static_cast<std::int64_t>(iy) * nx + ix) * 2 + (vertical ? 1 : 0);
}

bool point_less(const Point& a, const Point& b) {
  if (a[0] != b[0]) return a[0] < b[0];
  return a[1] < b[1];
}

bool polyline_less(const MsPolyline& a, const MsPolyline& b) {
  const std::size_t n = std::min(a.points.size(), b.points.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a.points[k] == b.points[k]) continue;
    return point_less(a.points[k], b.points[k]);
  }
  return a.points.size() < b.points.size();
}

void canonicalize(MsPolyline& p) {
  if (p.points.size() < 2) return;
  if (!p.closed) {
    if (point_less(p.points.back(), p.points.front())) {
      std::reverse(p.points.begin(), p.points.end());
    }
    return;
  }
  std::size_t start = 0;
  for (std::size_t k = 1; k < p.points.size(); ++k) {
    if (point_less(p.points[k], p.points[start])) start = k;
  }
  std::rotate(p.points.begin(), p.points.begin() + start, p.points.end());
  if (p.points.size() > 2 && point_less(p.points.back(), p.points[1])) {
    std::reverse(p.points.begin() + 1, p.points.end());
  }
}

}  // namespace

std::vector<MsPolyline> extract_zero_contours(const ScalarGrid& grid) {
  if (grid.nx < 2 || grid.ny < 2 ||
      grid.values.size() != static_cast<std::size_t>(grid.nx) * grid.ny) {
    throw std::invalid_argument("extract_zero_contours: malformed grid");
  }

  // one interpolated point per sign-change edge
  std::map<std::int64_t, Point> edge_points;
  auto point_on = [&](int ix, int iy, bool vertical) {
    const std::int64_t id = edge_id(ix, iy, vertical, grid.nx);
    auto it = edge_points.find(id);
    if (it == edge_points.end()) {
      const double v0 = grid.at(ix, iy);
      const double v1 = vertical ? grid.at(ix, iy + 1) : grid.at(ix + 1, iy);
      const double t = v0 / (v0 - v1);
      Point p{grid.x0 + ix * grid.dx, grid.y0 + iy * grid.dy};
      (vertical ? p[1] : p[0]) += t * (vertical ? grid.dy : grid.dx);
      it = edge_points.emplace(id, p).first;
    }
    return id;
  };

  std::vector<std::pair<std::int64_t, std::int64_t>> segments;
  for (int iy = 0; iy + 1 < grid.ny; ++iy) {
    for (int ix = 0; ix + 1 < grid.nx; ++ix) {
      const double bl = grid.at(ix, iy);
      const double br = grid.at(ix + 1, iy);
      const double tr = grid.at(ix + 1, iy + 1);
      const double tl = grid.at(ix, iy + 1);
      const int idx = (bl >= 0.0 ? 1 : 0) | (br >= 0.0 ? 2 : 0) |
                      (tr >= 0.0 ? 4 : 0) | (tl >= 0.0 ? 8 : 0);
      if (idx == 0 || idx == 15) continue;

      const auto B = [&] { return point_on(ix, iy, false); };
      const auto R = [&] { return point_on(ix + 1, iy, true); };
      const auto T = [&] { return point_on(ix, iy + 1, false); };
      const auto L = [&] { return point_on(ix, iy, true); };

      switch (idx) {
        case 1: case 14: segments.emplace_back(L(), B()); break;
        case 2: case 13: segments.emplace_back(B(), R()); break;
        case 3: case 12: segments.emplace_back(L(), R()); break;
        case 4: case 11: segments.emplace_back(R(), T()); break;
        case 6: case 9:  segments.emplace_back(B(), T()); break;
        case 7: case 8:  segments.emplace_back(L(), T()); break;
        case 5: {  // bl and tr inside: pair by the cell-center sign
          const bool center_in = (bl + br + tr + tl) * 0.25 >= 0.0;
          if (center_in) {
            segments.emplace_back(L(), T());
            segments.emplace_back(B(), R());
          } else {
            segments.emplace_back(L(), B());
            segments.emplace_back(R(), T());
          }
          break;
        }
        case 10: {  // br and tl inside
          const bool center_in = (bl + br + tr + tl) * 0.25 >= 0.0;
          if (center_in) {
            segments.emplace_back(L(), B());
            segments.emplace_back(R(), T());
          } else {
            segments.emplace_back(L(), T());
            segments.emplace_back(B(), R());
          }
          break;
        }
        default: break;
      }
    }
  }

  // chain segments; with the saddle rule every edge point touches at most
  // two of them
  std::map<std::int64_t, std::vector<std::size_t>> touching;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    touching[segments[s].first].push_back(s);
    touching[segments[s].second].push_back(s);
  }

  std::vector<bool> used(segments.size(), false);
  std::vector<MsPolyline> polylines;

  auto walk = [&](std::int64_t start_edge, std::size_t first_seg) {
    MsPolyline line;
    line.points.push_back(edge_points.at(start_edge));
    std::int64_t current = start_edge;
    std::size_t seg = first_seg;
    while (true) {
      used[seg] = true;
      const auto& [a, b] = segments[seg];
      const std::int64_t next = (a == current) ? b : a;
      line.points.push_back(edge_points.at(next));
      current = next;
      std::size_t next_seg = std::numeric_limits<std::size_t>::max();
      for (std::size_t cand : touching[current]) {
        if (!used[cand]) {
          next_seg = cand;
          break;
        }
      }
      if (next_seg == std::numeric_limits<std::size_t>::max()) break;
      seg = next_seg;
    }
    if (line.points.size() > 2 && current == start_edge) {
      line.points.pop_back();
      line.closed = true;
    }
    return line;
  };

  // open chains first, from degree-one endpoints in edge-id order
  for (const auto& [edge, segs] : touching) {
    if (segs.size() != 1 || used[segs[0]]) continue;
    polylines.push_back(walk(edge, segs[0]));
  }
  // whatever remains forms closed loops
  for (const auto& [edge, segs] : touching) {
    for (std::size_t s : segs) {
      if (!used[s]) polylines.push_back(walk(edge, s));
    }
  }

  for (MsPolyline& p : polylines) canonicalize(p);
  std::sort(polylines.begin(), polylines.end(), polyline_less);
  return polylines;
}

}  // namespace tiltgait
