#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "tiltgait/atlas.hpp"
#include "tiltgait/io.hpp"

using namespace tiltgait;

namespace {

bool is_corner(const GridSpec& g, int i, int j) {
  return (i == 0 || i == g.n - 1) && (j == 0 || j == g.n - 1);
}
bool is_edge(const GridSpec& g, int i, int j) {
  return (i == 0 || i == g.n - 1 || j == 0 || j == g.n - 1) &&
         !is_corner(g, i, j);
}

}  // namespace

TEST_CASE("grid spec matches the standard 17-point discretization") {
  GridSpec g;
  CHECK(g.n == 17);
  CHECK(g.spacing() == doctest::Approx(kPi / 16).epsilon(1e-15));
  CHECK(g.coord(0) == doctest::Approx(-kHalfPi));
  CHECK(g.coord(16) == doctest::Approx(kHalfPi));
  CHECK(g.coord(8) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("5x5 sweep: root counts, identity root, paint and report") {
  // a coarse sweep exercises the same structure as the full 17x17 and keeps
  // this test fast; the full grid runs in the acceptance suite
  GridSpec grid{5};
  const SurfaceAtlas atlas = sweep_grid({}, grid, 1);
  REQUIRE(atlas.points.size() == 25);

  SUBCASE("counts are 2 interior, 3 edges, 5 corners") {
    for (const AtlasPoint& pt : atlas.points) {
      if (is_corner(grid, pt.i, pt.j)) {
        CHECK(pt.root_count() == 5);
      } else if (is_edge(grid, pt.i, pt.j)) {
        CHECK(pt.root_count() == 3);
      } else {
        CHECK(pt.root_count() == 2);
      }
    }
  }

  SUBCASE("identity root present everywhere, residuals tight") {
    for (const AtlasPoint& pt : atlas.points) {
      bool found = false;
      for (const LabeledRoot& r : pt.roots) {
        CHECK(r.residual <= 1e-10);
        if (std::hypot(r.alpha3 - pt.fp.alpha1, r.alpha4 - pt.fp.alpha2) <=
            1e-8) {
          found = true;
        }
      }
      CHECK(found);
    }
  }

  SUBCASE("interior roots match the oracle branch values") {
    for (const AtlasPoint& pt : atlas.points) {
      if (is_corner(grid, pt.i, pt.j) || is_edge(grid, pt.i, pt.j)) continue;
      const auto od3 = oracles::offdiag_alpha3(pt.fp.alpha1);
      const auto od4 = oracles::offdiag_alpha4(pt.fp.alpha2);
      REQUIRE(od3.has_value());
      REQUIRE(od4.has_value());
      bool found_offdiag = false;
      for (const LabeledRoot& r : pt.roots) {
        if (std::hypot(r.alpha3 - *od3, r.alpha4 - *od4) <= 1e-8) {
          found_offdiag = true;
        }
      }
      CHECK(found_offdiag);
    }
  }

  SUBCASE("interior labels are (+,+) for identity, (-,-) for the other root") {
    for (const AtlasPoint& pt : atlas.points) {
      if (is_corner(grid, pt.i, pt.j) || is_edge(grid, pt.i, pt.j)) continue;
      for (const LabeledRoot& r : pt.roots) {
        const bool identity =
            std::hypot(r.alpha3 - pt.fp.alpha1, r.alpha4 - pt.fp.alpha2) <=
            1e-8;
        if (identity) {
          CHECK(r.label3 == PlaneLabel::Plus);
          CHECK(r.label4 == PlaneLabel::Plus);
        } else {
          CHECK(r.label3 == PlaneLabel::Minus);
          CHECK(r.label4 == PlaneLabel::Minus);
        }
      }
    }
  }

  SUBCASE("paint map marks colors only for negative-r roots") {
    const PaintMap map = paint_map(atlas);
    for (int i = 0; i < grid.n; ++i) {
      for (int j = 0; j < grid.n; ++j) {
        const AtlasPoint& pt = atlas.at(i, j);
        const ColorAvailability& cell = map.at(i, j);
        bool expect_red = false, expect_blue = false;
        for (const LabeledRoot& r : pt.roots) {
          if (!(r.r_value < 0)) continue;
          if (r.label3 == PlaneLabel::Plus && r.label4 == PlaneLabel::Plus)
            expect_red = true;
          if (r.label3 == PlaneLabel::Minus && r.label4 == PlaneLabel::Minus)
            expect_blue = true;
        }
        CHECK(cell.red == expect_red);
        CHECK(cell.blue == expect_blue);
      }
    }
  }

  SUBCASE("triangle report flags the forced positive root at the origin") {
    const TriangleReport report = triangle_discrepancy(atlas);
    CHECK(report.points_checked == 25);
    // (0,0) carries the identity root with r = 4 > 0 and lies outside the
    // claimed positive triangle
    CHECK(!report.positive_claim.contains(0.0, 0.0));
    bool origin_flagged = false;
    for (const TriangleMismatchRow& row : report.rows) {
      if (row.alpha1 == 0.0 && row.alpha2 == 0.0) {
        CHECK(row.has_positive_root);
        CHECK(!row.inside_positive_triangle);
        origin_flagged = true;
      }
    }
    CHECK(origin_flagged);
    // counts are consistent with the rows
    int pos = 0, neg = 0;
    for (const auto& row : report.rows) {
      if (row.has_positive_root != row.inside_positive_triangle) ++pos;
      if (row.has_negative_root != row.inside_negative_triangle) ++neg;
    }
    CHECK(pos == report.positive_mismatches);
    CHECK(neg == report.negative_mismatches);
  }
}

TEST_CASE("sweep output is independent of the worker count") {
  GridSpec grid{5};
  const SurfaceAtlas serial = sweep_grid({}, grid, 1);
  const SurfaceAtlas threaded = sweep_grid({}, grid, 4);
  CHECK(atlas_to_json(serial) == atlas_to_json(threaded));
}

TEST_CASE("triangle membership test handles edges and vertices") {
  const TriangleClaim t{{{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}}};
  CHECK(t.contains(0.25, 0.25));
  CHECK(t.contains(0.0, 0.0));    // vertex
  CHECK(t.contains(0.5, 0.5));    // hypotenuse
  CHECK(t.contains(0.5, 0.0));    // edge
  CHECK(!t.contains(0.6, 0.6));
  CHECK(!t.contains(-0.1, 0.5));
  CHECK(!t.contains(1.2, 0.0));
}
