#pragma once

#include <string>
#include <vector>

#include "tiltgait/colormap.hpp"
#include "tiltgait/types.hpp"

namespace tiltgait {

struct GaitSample {
  double t = 0.0;  // seconds in [0, period)
  GaitPoint point;
};

// A closed, time-parameterized quadruple curve over one period.
struct Gait {
  std::string name;
  double period_s = 1.0;
  bool closed = true;
  std::vector<GaitSample> samples;
};

// Which solution branch a rectangle gait rides.
enum class BranchSelect { Blue, Red, Identity };

std::string_view to_string(BranchSelect b);
std::optional<BranchSelect> branch_from_string(std::string_view s);

// An axis-aligned rectangle in the (alpha1, alpha2) plane, traversed at
// constant parameter speed over one period.
struct RectangleSpec {
  double alpha1_lo = 0.0, alpha1_hi = 0.0;
  double alpha2_lo = 0.0, alpha2_hi = 0.0;
  BranchSelect branch = BranchSelect::Identity;
  int sample_count = 128;
  bool counterclockwise = true;
  double period_s = 1.0;
  std::string name = "gait";

  void validate() const;  // throws std::invalid_argument
};

struct BiasSpec {
  double eta;

  explicit BiasSpec(double e) : eta(e) {
    if (!(e > 0.0 && e < 1.0)) {
      throw std::invalid_argument("BiasSpec: eta must lie in (0, 1)");
    }
  }
};

// Thrown when a constructed gait fails its own validation.
struct GaitValidationError : std::runtime_error {
  GaitValidationError(const std::string& what, ValidationReport r)
      : std::runtime_error(what), report(std::move(r)) {}
  ValidationReport report;
};

// Builds the rectangle gait: perimeter samples lifted to the requested
// branch, validated as a closed path. Throws BranchUnavailable when the
// color has no root at the first sample, BranchJump/NoConvergence from the
// continuation, GaitValidationError when the assembled path fails the
// adjacency/continuity/sign checks.
Gait rectangle_gait(const RectangleSpec& spec, const SolverConfig& cfg = {});

// Scales alpha3/alpha4 by eta, keeping alpha1/alpha2 bit-identical. The
// result generally leaves the gait surface; that is its purpose.
Gait bias_gait(const Gait& g, const BiasSpec& bias);

// Samples where every component attains its per-period minimum or maximum,
// deduplicated and ordered lexicographically.
std::vector<GaitPoint> gait_vertices(const Gait& g, double tol = 1e-9);

// Front-pair path of a gait's samples (projection onto alpha1/alpha2).
std::vector<FrontPair> front_path(const Gait& g);

// Re-labels the gait's samples and runs the path validator. Off-surface
// samples (e.g. biased gaits) are reported as residual violations and are
// not classified.
ValidationReport validate_gait(const Gait& g,
                               std::optional<ColorChoice> color = {},
                               const ValidatorConfig& vcfg = {},
                               const SolverConfig& scfg = {});

}  // namespace tiltgait
