#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tiltgait/solver.hpp"

// Adjacency rules for solution branches and the path validator built on
// them: a gait may keep its branch type between adjacent samples or pass
// through a "?" intermediate, but never hop directly between "+" and "-".

namespace tiltgait {

// Color coding of the two plain branch types on the (alpha1, alpha2) plane.
enum class ColorChoice { Red, Blue };

std::string_view to_string(ColorChoice c);
std::optional<ColorChoice> color_from_string(std::string_view s);

// Branch type of a rear pair. Only 7 of the 9 label combinations occur;
// (+,-) and (-,+) are rejected here.
struct RootType {
  PlaneLabel label3;
  PlaneLabel label4;

  static bool allowed(PlaneLabel l3, PlaneLabel l4);
  static RootType make(PlaneLabel l3, PlaneLabel l4);  // throws if forbidden
  static std::optional<RootType> try_make(PlaneLabel l3, PlaneLabel l4);

  friend bool operator==(const RootType&, const RootType&) = default;
};

// The type a color stands for: Red <=> (+,+), Blue <=> (-,-).
RootType color_type(ColorChoice c);

// Two labels may sit on adjacent samples iff they are equal or one of them
// is "?".
bool label_adjacency_allowed(PlaneLabel a, PlaneLabel b);

// Componentwise conjunction of the label rule.
bool type_adjacency_allowed(const RootType& a, const RootType& b);

struct PathSample {
  FrontPair fp;
  LabeledRoot root;
};

struct Violation {
  std::size_t from_index;
  std::size_t to_index;  // == from_index for single-sample violations
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool closed = false;
  bool closure_ok = true;     // wrap-around pair passed all step checks
  bool sign_constant = false;
  int r_sign = 0;             // +1 / -1 when sign_constant
  double max_front_step = 0.0;
  double max_rear_jump = 0.0;

  bool valid() const { return violations.empty(); }
};

struct ValidatorConfig {
  // adjacency granularity: consecutive front pairs may differ by at most
  // this much per axis
  double max_front_step = kPi / 16.0;
  double front_step_slack = 1e-9;
  // discrete continuity bound L: |d(rear)| <= L * |d(front)| + slack
  double continuity_bound = 10.0;
  double rear_jump_slack = 1e-9;
  // every chosen root must satisfy the surface equations this well
  double residual_tol = 1e-8;
};

// Certifies a sampled gait path. Throws PathTooCoarse when the sampling is
// wider than the adjacency granularity; everything else is reported as a
// violation in the returned report. When `color` is given, every sample
// must carry that color's type and the path must live in the negative-r
// region.
ValidationReport validate_gait_path(std::span<const PathSample> path,
                                    bool closed,
                                    std::optional<ColorChoice> color = {},
                                    const ValidatorConfig& vcfg = {});

// Tracks one solution branch along a path of front pairs by nearest-root
// continuation, starting from a root of the first sample. Throws BranchJump
// when the matched root moves further than the branch match radius and
// NoConvergence when a sample yields no root at all.
std::vector<LabeledRoot> continue_branch(std::span<const FrontPair> path,
                                         double initial_alpha3,
                                         double initial_alpha4,
                                         const SolverConfig& cfg = {});

}  // namespace tiltgait
