#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "tiltgait/singularity.hpp"
#include "tiltgait/solver.hpp"

using namespace tiltgait;

namespace {

bool has_root_near(const std::vector<LabeledRoot>& roots, double a3, double a4,
                   double tol) {
  for (const LabeledRoot& r : roots) {
    if (std::hypot(r.alpha3 - a3, r.alpha4 - a4) <= tol) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("the oracle factorization reproduces the transcribed sums") {
  // guard for everything else in this file that leans on the closed form
  std::mt19937 rng(77u);
  std::uniform_real_distribution<double> dist(-kHalfPi, kHalfPi);
  for (int k = 0; k < 2000; ++k) {
    const double a1 = dist(rng), a2 = dist(rng), a3 = dist(rng), a4 = dist(rng);
    const GaitTrig t(a1, a2, a3, a4);
    CHECK(eval_r_phi(t) ==
          doctest::Approx(oracles::factored_r_phi(a1, a2, a3, a4))
              .epsilon(1e-12).scale(1.0));
    CHECK(eval_r_theta(t) ==
          doctest::Approx(oracles::factored_r_theta(a1, a2, a3, a4))
              .epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("roots at the origin follow the closed form") {
  // s3 (c4 + 2.88 s4) = 0 and s4 (c3 - 2.88 s3) = 0 have exactly two
  // solutions on the square
  const auto roots = solve_rear_angles(FrontPair(0, 0));
  REQUIRE(roots.size() == 2);

  const double c = oracles::offset();  // atan(1/2.88) ~= 0.334198
  CHECK(has_root_near(roots, 0.0, 0.0, 1e-9));
  CHECK(has_root_near(roots, c, -c, 1e-9));

  // five-digit reference rendering of the same pair
  CHECK(has_root_near(roots, 0.33411, -0.33411, 5e-4));

  for (const LabeledRoot& r : roots) {
    CHECK(r.residual <= 1e-10);
    CHECK(r.r_value ==
          doctest::Approx(eval_r(GaitPoint(0, 0, r.alpha3, r.alpha4))));
  }
  // deterministic lexicographic ordering
  CHECK(roots[0].alpha3 < roots[1].alpha3);
}

TEST_CASE("reference roots are found") {
  SUBCASE("(5pi/16, pi/8) carries the blue-branch root (-0.648, -0.727)") {
    const auto roots = solve_rear_angles(FrontPair(5 * kPi / 16, kPi / 8));
    CHECK(has_root_near(roots, -0.648, -0.727, 5e-3));
  }
  SUBCASE("(3pi/8, -3pi/8) carries both reference roots") {
    const auto roots = solve_rear_angles(FrontPair(3 * kPi / 8, -3 * kPi / 8));
    CHECK(has_root_near(roots, -0.844, 0.844, 5e-3));
    CHECK(has_root_near(roots, 1.178, -1.178, 5e-3));
  }
  SUBCASE("(-3pi/8, 3pi/8) carries its identity root") {
    const auto roots = solve_rear_angles(FrontPair(-3 * kPi / 8, 3 * kPi / 8));
    CHECK(has_root_near(roots, -3 * kPi / 8, 3 * kPi / 8, 1e-8));
  }
}

TEST_CASE("corner (pi/2, pi/2) has exactly the five closed-form roots") {
  const auto roots = solve_rear_angles(FrontPair(kHalfPi, kHalfPi));
  const auto expected = oracles::corner_roots_pp();
  REQUIRE(roots.size() == expected.size());
  for (const auto& [a3, a4] : expected) {
    CHECK(has_root_near(roots, a3, a4, 1e-9));
  }
}

TEST_CASE("identity root exists at random front pairs") {
  std::mt19937 rng(31u);
  std::uniform_real_distribution<double> dist(-kHalfPi, kHalfPi);
  for (int k = 0; k < 25; ++k) {
    const double a1 = dist(rng), a2 = dist(rng);
    const auto roots = solve_rear_angles(FrontPair(a1, a2));
    CHECK(has_root_near(roots, a1, a2, 1e-8));
  }
}

TEST_CASE("every returned root satisfies the system through the evaluators") {
  std::mt19937 rng(32u);
  std::uniform_real_distribution<double> dist(-kHalfPi, kHalfPi);
  for (int k = 0; k < 10; ++k) {
    const FrontPair fp(dist(rng), dist(rng));
    for (const LabeledRoot& r : solve_rear_angles(fp)) {
      const GaitTrig t(fp.alpha1, fp.alpha2, r.alpha3, r.alpha4);
      CHECK(std::fabs(eval_r_phi(t)) <= 1e-10);
      CHECK(std::fabs(eval_r_theta(t)) <= 1e-10);
      CHECK(in_tilt_domain(r.alpha3));
      CHECK(in_tilt_domain(r.alpha4));
    }
  }
}

TEST_CASE("identity branch is labeled (+,+)") {
  const auto out = classify_root(FrontPair(0, 0), 0.0, 0.0);
  CHECK(out.label3 == PlaneLabel::Plus);
  CHECK(out.label4 == PlaneLabel::Plus);
  CHECK(out.slope3 == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(out.slope4 == doctest::Approx(1.0).epsilon(1e-6));

  // also at a boundary point, where one-sided differences kick in
  const auto edge = classify_root(FrontPair(kHalfPi, 0.3), kHalfPi, 0.3);
  CHECK(edge.label3 == PlaneLabel::Plus);
  CHECK(edge.label4 == PlaneLabel::Plus);
}

TEST_CASE("blue branch at (5pi/16, pi/8) is labeled (-,-)") {
  const auto roots = solve_rear_angles(FrontPair(5 * kPi / 16, kPi / 8));
  bool checked = false;
  for (const LabeledRoot& r : roots) {
    if (std::hypot(r.alpha3 + 0.648, r.alpha4 + 0.727) < 5e-3) {
      CHECK(r.label3 == PlaneLabel::Minus);
      CHECK(r.label4 == PlaneLabel::Minus);
      checked = true;
    }
  }
  CHECK(checked);
}

TEST_CASE("degenerate front pair yields the ? label") {
  // On the line alpha1 = atan(1/2.88)/2 the two alpha3 planes intersect and
  // any alpha4 solves the system together with alpha3 = alpha1. Continuing
  // such a root in alpha2 keeps alpha4 frozen (slope 0 -> "?"); continuing
  // in alpha1 has no nearby root at all (branch lost -> "?").
  const double half_c = oracles::offset() / 2;
  const GaitTrig t(half_c, 0.0, half_c, 0.6);
  REQUIRE(std::fabs(eval_r_phi(t)) < 1e-12);
  REQUIRE(std::fabs(eval_r_theta(t)) < 1e-12);

  const auto out = classify_root(FrontPair(half_c, 0.0), half_c, 0.6);
  CHECK(out.label4 == PlaneLabel::Intersection);
  CHECK(std::fabs(out.slope4) <= 0.05);
  CHECK(out.label3 == PlaneLabel::Intersection);
  CHECK(out.branch_lost3);
}

TEST_CASE("dedup is idempotent and ordering deterministic") {
  SolverConfig cfg;
  const FrontPair fp(0.4, -0.2);
  const auto a = solve_rear_angles(fp, cfg);
  const auto b = solve_rear_angles(fp, cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].alpha3 == b[k].alpha3);  // bit-identical reruns
    CHECK(a[k].alpha4 == b[k].alpha4);
    if (k > 0) {
      const bool ordered = a[k - 1].alpha3 < a[k].alpha3 ||
                           (a[k - 1].alpha3 == a[k].alpha3 &&
                            a[k - 1].alpha4 < a[k].alpha4);
      CHECK(ordered);
      CHECK(std::hypot(a[k].alpha3 - a[k - 1].alpha3,
                       a[k].alpha4 - a[k - 1].alpha4) > cfg.dedup_radius);
    }
  }
}

TEST_CASE("refine_root rejects seeds that wander outside the domain") {
  // at (-pi/2, 0) the wrapped identity root sits at +pi/2; a seed near the
  // out-of-domain branch value c - alpha1 > pi/2 must not be returned
  const FrontPair fp(-kHalfPi, 0.0);
  const auto roots = solve_rear_angles(fp);
  for (const LabeledRoot& r : roots) {
    CHECK(r.alpha3 <= kHalfPi + 1e-9);
    CHECK(r.alpha3 >= -kHalfPi - 1e-9);
  }
}

TEST_CASE("front pair construction validates the domain") {
  CHECK_THROWS_AS(FrontPair(2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(FrontPair(0.0, -1.8), std::invalid_argument);
  CHECK_NOTHROW(FrontPair(kHalfPi, -kHalfPi));
}
