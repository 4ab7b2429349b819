#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tiltgait/atlas.hpp"
#include "tiltgait/attitude_map.hpp"
#include "tiltgait/gait.hpp"
#include "tiltgait/io.hpp"

using namespace tiltgait;

namespace {

Gait small_gait() {
  RectangleSpec s;
  s.alpha1_lo = -3 * kPi / 8;
  s.alpha1_hi = -kPi / 8;
  s.alpha2_lo = kPi / 8;
  s.alpha2_hi = 3 * kPi / 8;
  s.branch = BranchSelect::Identity;
  s.sample_count = 16;
  s.name = "tiny";
  return rectangle_gait(s);
}

}  // namespace

TEST_CASE("12-significant-digit rounding") {
  CHECK(round_sig12(0.0) == 0.0);
  CHECK(round_sig12(1.0) == 1.0);
  CHECK(round_sig12(kPi) == doctest::Approx(kPi).epsilon(1e-11));
  CHECK(round_sig12(kPi) != kPi);  // truncated past 12 digits
  CHECK(format_sig12(0.5) == "0.5");
  CHECK(format_sig12(-1.0 / 3.0) == "-0.333333333333");
}

TEST_CASE("gait json round trip") {
  const Gait g = small_gait();
  GaitProvenance prov;
  prov.kind = "rect";
  prov.branch = "identity";
  prov.alpha1_range = {-3 * kPi / 8, -kPi / 8};
  prov.alpha2_range = {kPi / 8, 3 * kPi / 8};
  prov.sample_count = 16;

  const std::string text = gait_to_json(g, prov);
  GaitProvenance back_prov;
  const Gait back = gait_from_json(text, &back_prov);

  CHECK(back.name == g.name);
  CHECK(back.period_s == g.period_s);
  CHECK(back.closed == g.closed);
  REQUIRE(back.samples.size() == g.samples.size());
  for (std::size_t k = 0; k < g.samples.size(); ++k) {
    CHECK(std::fabs(back.samples[k].point.alpha1 -
                    g.samples[k].point.alpha1) <= 1e-11);
    CHECK(std::fabs(back.samples[k].point.alpha3 -
                    g.samples[k].point.alpha3) <= 1e-11);
    CHECK(back.samples[k].t == doctest::Approx(g.samples[k].t));
  }
  CHECK(back_prov.kind == "rect");
  CHECK(back_prov.branch == "identity");

  // serialization is deterministic
  CHECK(gait_to_json(g, prov) == text);
}

TEST_CASE("gait json rejects malformed documents") {
  CHECK_THROWS(gait_from_json("{}"));
  CHECK_THROWS(gait_from_json(
      R"({"name":"x","period_s":1.0,"closed":true,"samples":[]})"));
  // times must strictly increase from zero
  CHECK_THROWS(gait_from_json(
      R"({"name":"x","period_s":1.0,"closed":true,
          "samples":[{"t":0.5,"alpha":[0,0,0,0]}]})"));
  CHECK_THROWS(gait_from_json(
      R"({"name":"x","period_s":1.0,"closed":true,
          "samples":[{"t":0.0,"alpha":[0,0,0,0]},
                     {"t":0.0,"alpha":[0,0,0,0]}]})"));
  // angles outside the domain
  CHECK_THROWS(gait_from_json(
      R"({"name":"x","period_s":1.0,"closed":true,
          "samples":[{"t":0.0,"alpha":[2.5,0,0,0]}]})"));
}

TEST_CASE("atlas json shape") {
  GridSpec grid{3};
  const SurfaceAtlas atlas = sweep_grid({}, grid, 1);
  const std::string text = atlas_to_json(atlas);
  CHECK(text.find("\"grid_n\": 3") != std::string::npos);
  CHECK(text.find("\"spacing_rad\"") != std::string::npos);
  CHECK(text.find("\"points\"") != std::string::npos);
  CHECK(text.find("\"alpha3\"") != std::string::npos);
  CHECK(text.find("\"label3\"") != std::string::npos);
  CHECK(text.find("\"r_value\"") != std::string::npos);
  CHECK(text.find("\"residual\"") != std::string::npos);
  CHECK(atlas_to_json(atlas) == text);
}

TEST_CASE("contour csv carries the fixed column layout") {
  const Gait g = small_gait();
  const Gait biased = bias_gait(g, BiasSpec(0.8));
  AttitudeGrid grid;
  grid.resolution = 101;
  const ContourSet set = gait_singular_union(biased, 2, grid);
  const std::string csv = contours_to_csv({&set});
  CHECK(csv.find("gait,t_index,polyline_id,point_index,phi,theta\n") !=
        std::string::npos);
  CHECK(csv.find("tiny-biased") != std::string::npos);

  // empty sets still emit the header
  ContourSet empty;
  const std::string empty_csv = contours_to_csv({&empty});
  CHECK(empty_csv.find("gait,t_index,polyline_id,point_index,phi,theta\n") !=
        std::string::npos);
}

TEST_CASE("svg output is a well-formed document with paths") {
  const Gait g = small_gait();
  const Gait biased = bias_gait(g, BiasSpec(0.8));
  AttitudeGrid grid;
  grid.resolution = 101;
  const ContourSet a = gait_singular_union(biased, 2, grid);
  const ContourSet b = singular_locus(biased.samples[0].point, grid);
  const std::string svg = contours_to_svg({&a, &b});
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("stroke=\"red\"") != std::string::npos);
  CHECK(svg.find("stroke=\"blue\"") != std::string::npos);
}

TEST_CASE("margin report renders unbounded and finite margins") {
  const Gait g = small_gait();
  AttitudeGrid grid;
  grid.resolution = 101;

  const ContourSet on_surface = gait_singular_union(g, 2, grid);
  const std::string unbounded =
      margin_to_json(on_surface, robustness_margin(on_surface));
  CHECK(unbounded.find("\"unbounded\"") != std::string::npos);

  const Gait biased = bias_gait(g, BiasSpec(0.8));
  const ContourSet finite_set = gait_singular_union(biased, 2, grid);
  const std::string finite =
      margin_to_json(finite_set, robustness_margin(finite_set));
  CHECK(finite.find("\"attained_at\"") != std::string::npos);
}

TEST_CASE("validation report json") {
  const Gait g = small_gait();
  const ValidationReport ok = validate_gait(g);
  const std::string text = validation_report_to_json(ok);
  CHECK(text.find("\"verdict\": \"valid\"") != std::string::npos);

  const Gait biased = bias_gait(g, BiasSpec(0.9));
  const std::string bad = validation_report_to_json(validate_gait(biased));
  CHECK(bad.find("\"verdict\": \"invalid\"") != std::string::npos);
  CHECK(bad.find("off-surface") != std::string::npos);
}

TEST_CASE("triangle report json carries claims and mismatch rows") {
  GridSpec grid{5};
  const SurfaceAtlas atlas = sweep_grid({}, grid, 1);
  const TriangleReport report = triangle_discrepancy(atlas);
  const std::string text = triangle_report_to_json(report);
  CHECK(text.find("\"positive_triangle\"") != std::string::npos);
  CHECK(text.find("\"negative_triangle\"") != std::string::npos);
  CHECK(text.find("\"mismatches\"") != std::string::npos);
  CHECK(text.find("\"points_checked\": 25") != std::string::npos);
}
