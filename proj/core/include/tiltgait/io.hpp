#pragma once

#include <array>
#include <string>
#include <vector>

#include "tiltgait/atlas.hpp"
#include "tiltgait/attitude_map.hpp"
#include "tiltgait/colormap.hpp"
#include "tiltgait/gait.hpp"

// Text emission for every artifact the tool produces. All output is
// deterministic for fixed inputs (modulo the version header line) and all
// floating-point values carry 12 significant digits.

namespace tiltgait {

// Round-trip a double through a 12-significant-digit decimal rendering.
double round_sig12(double v);

// "%.12g" rendering used across CSV/JSON output.
std::string format_sig12(double v);

struct GaitProvenance {
  std::string kind = "external";  // "rect" | "bias" | "external"
  // rect
  std::string branch;
  std::array<double, 2> alpha1_range{0.0, 0.0};
  std::array<double, 2> alpha2_range{0.0, 0.0};
  int sample_count = 0;
  // bias
  std::string source;
  double eta = 0.0;
};

std::string atlas_to_json(const SurfaceAtlas& atlas);

// Per-root CSV of the sweep: i,j,alpha1,alpha2,root_index,alpha3,alpha4,
// label3,label4,r_value,residual.
std::string atlas_roots_to_csv(const SurfaceAtlas& atlas);

// Color availability per grid point: i,j,alpha1,alpha2,red,blue,other.
std::string paint_to_csv(const PaintMap& map);

std::string triangle_report_to_json(const TriangleReport& report);

std::string gait_to_json(const Gait& g, const GaitProvenance& prov = {});
Gait gait_from_json(const std::string& text,
                    GaitProvenance* provenance = nullptr);

std::string validation_report_to_json(const ValidationReport& report);

// columns: gait,t_index,polyline_id,point_index,phi,theta
std::string contours_to_csv(const std::vector<const ContourSet*>& sets);

// Origin-centered plot of one or two contour sets; the first set is drawn
// red, the second blue.
std::string contours_to_svg(const std::vector<const ContourSet*>& sets);

std::string margin_to_json(const ContourSet& contours,
                           const RobustnessMargin& margin);
std::string comparison_to_json(const GaitComparison& cmp);

}  // namespace tiltgait
