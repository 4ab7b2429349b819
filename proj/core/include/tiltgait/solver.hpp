#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tiltgait/types.hpp"

namespace tiltgait {

// The front rotor pair (alpha1, alpha2) for which the rear pair is solved.
struct FrontPair {
  double alpha1{0.0};
  double alpha2{0.0};

  FrontPair() = default;
  FrontPair(double a1, double a2) : alpha1(a1), alpha2(a2) {
    if (!in_tilt_domain(a1) || !in_tilt_domain(a2)) {
      throw std::invalid_argument(
          "FrontPair: angle outside [-pi/2, pi/2]");
    }
  }

  friend bool operator==(const FrontPair&, const FrontPair&) = default;
};

// Solution-branch label of one rear angle: increases with its front partner
// ("+"), decreases ("-"), or sits on the intersection line of the two
// branch planes ("?").
enum class PlaneLabel { Plus, Minus, Intersection };

std::string_view to_string(PlaneLabel label);
std::optional<PlaneLabel> plane_label_from_string(std::string_view s);

struct SolverConfig {
  // seed grid laid over [-pi/2, pi/2]^2 for the multi-start Newton search
  int seed_grid_n = 33;
  double newton_step_tol = 1e-12;
  double newton_residual_tol = 1e-10;
  int max_iterations = 50;
  // roots closer than this (Euclidean, rad) are considered the same root
  double dedup_radius = 1e-6;
  // continuation step and slope threshold used when labeling roots
  double classify_step = kPi / 64.0;
  double slope_threshold = 0.05;
  // nearest-root matches further than this are branch losses
  double branch_match_radius = 0.5;
};

// A solved rear pair with branch labels, the constant term of the
// linearized condition at the assembled quadruple, and the re-evaluated
// residual max(|r_phi|, |r_theta|).
struct LabeledRoot {
  double alpha3{0.0};
  double alpha4{0.0};
  PlaneLabel label3 = PlaneLabel::Intersection;
  PlaneLabel label4 = PlaneLabel::Intersection;
  double r_value{0.0};
  double residual{0.0};
  bool branch_lost3 = false;
  bool branch_lost4 = false;
};

// Unlabeled converged root.
struct RearRoot {
  double alpha3{0.0};
  double alpha4{0.0};
  double residual{0.0};
};

// Damped Newton refinement from a single seed. Returns nothing if the
// iteration stalls, hits a singular Jacobian, fails the residual tolerance,
// or converges outside the (slack-extended) closed square.
std::optional<RearRoot> refine_root(const FrontPair& fp, double seed3,
                                    double seed4,
                                    const SolverConfig& cfg = {});

// All distinct rear roots at fp found from the seed grid plus the identity
// seed, deduplicated and ordered lexicographically by (alpha3, alpha4).
// Throws NoConvergence only if no seed converges.
std::vector<RearRoot> find_rear_roots(const FrontPair& fp,
                                      const SolverConfig& cfg = {});

struct ClassifyOutcome {
  PlaneLabel label3 = PlaneLabel::Intersection;
  PlaneLabel label4 = PlaneLabel::Intersection;
  double slope3 = 0.0;  // d(alpha3)/d(alpha1) along the branch
  double slope4 = 0.0;  // d(alpha4)/d(alpha2) along the branch
  bool branch_lost3 = false;
  bool branch_lost4 = false;
};

// Labels a root by the sign of its continuation slopes. Central differences
// where both sides of the front pair stay in the domain, one-sided at the
// boundary. A lost branch is reported and labeled "?".
ClassifyOutcome classify_root(const FrontPair& fp, double alpha3,
                              double alpha4, const SolverConfig& cfg = {});

// find_rear_roots + classify_root + r_value/residual attachment.
std::vector<LabeledRoot> solve_rear_angles(const FrontPair& fp,
                                           const SolverConfig& cfg = {});

}  // namespace tiltgait
