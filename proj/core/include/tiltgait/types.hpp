#pragma once

#include <cmath>
#include <stdexcept>

namespace tiltgait {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;

// Tilting angles live on the closed square [-pi/2, pi/2]; a hair of slack
// absorbs roundoff from solvers converging onto the boundary.
inline constexpr double kTiltDomainSlack = 1e-9;

inline bool in_tilt_domain(double a) noexcept {
  return std::isfinite(a) && a >= -kHalfPi - kTiltDomainSlack &&
         a <= kHalfPi + kTiltDomainSlack;
}

// One quadruple of rotor tilting angles, radians.
struct GaitPoint {
  double alpha1{0.0};
  double alpha2{0.0};
  double alpha3{0.0};
  double alpha4{0.0};

  GaitPoint() = default;
  GaitPoint(double a1, double a2, double a3, double a4)
      : alpha1(a1), alpha2(a2), alpha3(a3), alpha4(a4) {
    if (!in_tilt_domain(a1) || !in_tilt_domain(a2) || !in_tilt_domain(a3) ||
        !in_tilt_domain(a4)) {
      throw std::invalid_argument(
          "GaitPoint: tilting angle outside [-pi/2, pi/2]");
    }
  }

  friend bool operator==(const GaitPoint&, const GaitPoint&) = default;
};

// Roll/pitch pair, radians. The analysis domain is the open square
// (-pi/2, pi/2)^2; only finiteness is enforced here.
struct Attitude {
  double phi{0.0};
  double theta{0.0};

  Attitude() = default;
  Attitude(double roll, double pitch) : phi(roll), theta(pitch) {
    if (!std::isfinite(roll) || !std::isfinite(pitch)) {
      throw std::invalid_argument("Attitude: non-finite angle");
    }
  }

  friend bool operator==(const Attitude&, const Attitude&) = default;
};

// Cached sines/cosines of the four tilting angles. All evaluators accept
// this directly so grid sweeps can hoist the trig out of their inner loops.
struct GaitTrig {
  double s1, c1, s2, c2, s3, c3, s4, c4;

  explicit GaitTrig(const GaitPoint& g)
      : s1(std::sin(g.alpha1)), c1(std::cos(g.alpha1)),
        s2(std::sin(g.alpha2)), c2(std::cos(g.alpha2)),
        s3(std::sin(g.alpha3)), c3(std::cos(g.alpha3)),
        s4(std::sin(g.alpha4)), c4(std::cos(g.alpha4)) {}

  GaitTrig(double a1, double a2, double a3, double a4)
      : s1(std::sin(a1)), c1(std::cos(a1)), s2(std::sin(a2)),
        c2(std::cos(a2)), s3(std::sin(a3)), c3(std::cos(a3)),
        s4(std::sin(a4)), c4(std::cos(a4)) {}
};

struct AttitudeTrig {
  double sp, cp, st, ct;

  explicit AttitudeTrig(const Attitude& a)
      : sp(std::sin(a.phi)), cp(std::cos(a.phi)), st(std::sin(a.theta)),
        ct(std::cos(a.theta)) {}

  AttitudeTrig(double sphi, double cphi, double stheta, double ctheta)
      : sp(sphi), cp(cphi), st(stheta), ct(ctheta) {}
};

// First-order expansion of the singularity condition around zero attitude:
// value ~= r_phi * phi + r_theta * theta + r.
struct LinearizedTriple {
  double r_phi{0.0};
  double r_theta{0.0};
  double r{0.0};
};

}  // namespace tiltgait
