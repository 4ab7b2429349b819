#pragma once

#include "tiltgait/types.hpp"

// Evaluators for the invertibility condition of the tilt-rotor's decoupling
// matrix. The condition is a trigonometric polynomial in the four tilting
// angles and the roll/pitch attitude; the decoupling matrix is singular
// exactly where it evaluates to zero.
//
// The term lists are kept in raw transcribed form on purpose: the unit and
// acceptance tests cross-check the independent code paths against each other
// (full condition at zero attitude == grouped zero-attitude form == constant
// term), which catches transcription typos. Do not "simplify" the sums.

namespace tiltgait {

// Fixed allocation coefficients of the target vehicle. These are opaque
// geometry data, printed to four significant figures and treated as exact.
inline constexpr double kCoef1_000 = 1.000;
inline constexpr double kCoef2_880 = 2.880;
inline constexpr double kCoef4_000 = 4.000;
inline constexpr double kCoef5_592 = 5.592;
inline constexpr double kCoef2_000 = 2.000;
inline constexpr double kCoef0_9716 = 0.9716;
inline constexpr double kCoef0_1687 = 0.1687;

// Full condition: singular decoupling matrix <=> value == 0.
inline double eval_full_condition(const GaitTrig& g, const AttitudeTrig& a) {
  const double s1 = g.s1, c1 = g.c1, s2 = g.s2, c2 = g.c2;
  const double s3 = g.s3, c3 = g.c3, s4 = g.s4, c4 = g.c4;
  const double sp = a.sp, cp = a.cp, st = a.st, ct = a.ct;
  return kCoef1_000 * c1 * c2 * c3 * s4 * st
       - kCoef1_000 * c1 * s2 * c3 * c4 * st
       - kCoef2_880 * c1 * c2 * s3 * s4 * st
       + kCoef2_880 * c1 * s2 * s3 * c4 * st
       - kCoef2_880 * s1 * c2 * c3 * s4 * st
       + kCoef2_880 * s1 * s2 * c3 * c4 * st
       - kCoef1_000 * s1 * c2 * s3 * s4 * st
       + kCoef1_000 * s1 * s2 * s3 * c4 * st
       + kCoef4_000 * c1 * c2 * c3 * c4 * cp * ct
       + kCoef5_592 * c1 * c2 * c3 * s4 * cp * ct
       - kCoef5_592 * c1 * c2 * s3 * c4 * cp * ct
       + kCoef5_592 * c1 * s2 * c3 * c4 * cp * ct
       - kCoef5_592 * s1 * c2 * c3 * c4 * cp * ct
       + kCoef1_000 * c1 * c2 * s3 * c4 * sp * ct
       + kCoef0_9716 * c1 * c2 * s3 * s4 * cp * ct
       - kCoef2_000 * c1 * s2 * c3 * s4 * cp * ct
       + kCoef0_9716 * c1 * s2 * s3 * c4 * cp * ct
       - kCoef1_000 * s1 * c2 * c3 * c4 * sp * ct
       + kCoef0_9716 * s1 * c2 * c3 * s4 * cp * ct
       - kCoef2_000 * s1 * c2 * s3 * c4 * cp * ct
       + kCoef0_9716 * s1 * s2 * c3 * c4 * cp * ct
       + kCoef2_880 * c1 * c2 * s3 * s4 * sp * ct
       + kCoef2_880 * c1 * s2 * s3 * c4 * sp * ct
       - kCoef0_1687 * c1 * s2 * s3 * s4 * cp * ct
       - kCoef2_880 * s1 * c2 * c3 * s4 * sp * ct
       + kCoef0_1687 * s1 * c2 * s3 * s4 * cp * ct
       - kCoef2_880 * s1 * s2 * c3 * c4 * sp * ct
       - kCoef0_1687 * s1 * s2 * c3 * s4 * cp * ct
       + kCoef0_1687 * s1 * s2 * s3 * c4 * cp * ct
       - kCoef1_000 * c1 * s2 * s3 * s4 * sp * ct
       + kCoef1_000 * s1 * s2 * c3 * s4 * sp * ct;
}

inline double eval_full_condition(const GaitPoint& g, const Attitude& a) {
  return eval_full_condition(GaitTrig(g), AttitudeTrig(a));
}

// Roll coefficient of the near-zero-attitude expansion.
inline double eval_r_phi(const GaitTrig& g) {
  const double s1 = g.s1, c1 = g.c1, s2 = g.s2, c2 = g.c2;
  const double s3 = g.s3, c3 = g.c3, s4 = g.s4, c4 = g.c4;
  return kCoef1_000 * c1 * c2 * s3 * c4
       - kCoef1_000 * s1 * c2 * c3 * c4
       - kCoef1_000 * c1 * s2 * s3 * s4
       + kCoef1_000 * s1 * s2 * c3 * s4
       + kCoef2_880 * c1 * c2 * s3 * s4
       + kCoef2_880 * c1 * s2 * s3 * c4
       - kCoef2_880 * s1 * c2 * c3 * s4
       - kCoef2_880 * s1 * s2 * c3 * c4;
}

inline double eval_r_phi(const GaitPoint& g) { return eval_r_phi(GaitTrig(g)); }

// Pitch coefficient of the near-zero-attitude expansion.
inline double eval_r_theta(const GaitTrig& g) {
  const double s1 = g.s1, c1 = g.c1, s2 = g.s2, c2 = g.c2;
  const double s3 = g.s3, c3 = g.c3, s4 = g.s4, c4 = g.c4;
  return kCoef1_000 * c1 * c2 * c3 * s4
       - kCoef1_000 * c1 * s2 * c3 * c4
       - kCoef1_000 * s1 * c2 * s3 * s4
       + kCoef1_000 * s1 * s2 * s3 * c4
       - kCoef2_880 * c1 * c2 * s3 * s4
       + kCoef2_880 * c1 * s2 * s3 * c4
       - kCoef2_880 * s1 * c2 * c3 * s4
       + kCoef2_880 * s1 * s2 * c3 * c4;
}

inline double eval_r_theta(const GaitPoint& g) {
  return eval_r_theta(GaitTrig(g));
}

// Constant term of the near-zero-attitude expansion.
inline double eval_r(const GaitTrig& g) {
  const double s1 = g.s1, c1 = g.c1, s2 = g.s2, c2 = g.c2;
  const double s3 = g.s3, c3 = g.c3, s4 = g.s4, c4 = g.c4;
  return kCoef4_000 * c1 * c2 * c3 * c4
       + kCoef5_592 * c1 * c2 * c3 * s4
       - kCoef5_592 * c1 * c2 * s3 * c4
       + kCoef5_592 * c1 * s2 * c3 * c4
       - kCoef5_592 * s1 * c2 * c3 * c4
       + kCoef0_9716 * c1 * c2 * s3 * s4
       + kCoef0_9716 * c1 * s2 * s3 * c4
       + kCoef0_9716 * s1 * c2 * c3 * s4
       + kCoef0_9716 * s1 * s2 * c3 * c4
       - kCoef2_000 * c1 * s2 * c3 * s4
       - kCoef2_000 * s1 * c2 * s3 * c4
       - kCoef0_1687 * c1 * s2 * s3 * s4
       + kCoef0_1687 * s1 * c2 * s3 * s4
       - kCoef0_1687 * s1 * s2 * c3 * s4
       + kCoef0_1687 * s1 * s2 * s3 * c4;
}

inline double eval_r(const GaitPoint& g) { return eval_r(GaitTrig(g)); }

// Zero-attitude condition in its grouped printed form. Deliberately a
// separate code path from eval_r; the two agree algebraically and the tests
// assert it.
inline double eval_zero_attitude(const GaitTrig& g) {
  const double s1 = g.s1, c1 = g.c1, s2 = g.s2, c2 = g.c2;
  const double s3 = g.s3, c3 = g.c3, s4 = g.s4, c4 = g.c4;
  return kCoef4_000 * c1 * c2 * c3 * c4
       + kCoef5_592 * (+c1 * c2 * c3 * s4 - c1 * c2 * s3 * c4
                       + c1 * s2 * c3 * c4 - s1 * c2 * c3 * c4)
       + kCoef0_9716 * (+c1 * c2 * s3 * s4 + c1 * s2 * s3 * c4
                        + s1 * c2 * c3 * s4 + s1 * s2 * c3 * c4)
       + kCoef2_000 * (-c1 * s2 * c3 * s4 - s1 * c2 * s3 * c4)
       + kCoef0_1687 * (-c1 * s2 * s3 * s4 + s1 * c2 * s3 * s4
                        - s1 * s2 * c3 * s4 + s1 * s2 * s3 * c4);
}

inline double eval_zero_attitude(const GaitPoint& g) {
  return eval_zero_attitude(GaitTrig(g));
}

inline LinearizedTriple linearize(const GaitTrig& g) {
  return LinearizedTriple{eval_r_phi(g), eval_r_theta(g), eval_r(g)};
}

inline LinearizedTriple linearize(const GaitPoint& g) {
  return linearize(GaitTrig(g));
}

inline double eval_linearized(const LinearizedTriple& t, const Attitude& a) {
  return t.r_phi * a.phi + t.r_theta * a.theta + t.r;
}

inline double eval_linearized(const GaitPoint& g, const Attitude& a) {
  return eval_linearized(linearize(g), a);
}

// Partial derivatives of (r_phi, r_theta) with respect to (alpha3, alpha4),
// obtained by term-wise differentiation of the sums above. Used as the
// Newton Jacobian by the surface solver; validated against finite
// differences in the tests.
struct RearJacobian {
  double dphi_d3, dphi_d4;
  double dtheta_d3, dtheta_d4;
};

inline RearJacobian rear_jacobian(const GaitTrig& g) {
  const double s1 = g.s1, c1 = g.c1, s2 = g.s2, c2 = g.c2;
  const double s3 = g.s3, c3 = g.c3, s4 = g.s4, c4 = g.c4;
  RearJacobian j;
  j.dphi_d3 = kCoef1_000 * c1 * c2 * c3 * c4
            + kCoef1_000 * s1 * c2 * s3 * c4
            - kCoef1_000 * c1 * s2 * c3 * s4
            - kCoef1_000 * s1 * s2 * s3 * s4
            + kCoef2_880 * c1 * c2 * c3 * s4
            + kCoef2_880 * c1 * s2 * c3 * c4
            + kCoef2_880 * s1 * c2 * s3 * s4
            + kCoef2_880 * s1 * s2 * s3 * c4;
  j.dphi_d4 = -kCoef1_000 * c1 * c2 * s3 * s4
            + kCoef1_000 * s1 * c2 * c3 * s4
            - kCoef1_000 * c1 * s2 * s3 * c4
            + kCoef1_000 * s1 * s2 * c3 * c4
            + kCoef2_880 * c1 * c2 * s3 * c4
            - kCoef2_880 * c1 * s2 * s3 * s4
            - kCoef2_880 * s1 * c2 * c3 * c4
            + kCoef2_880 * s1 * s2 * c3 * s4;
  j.dtheta_d3 = -kCoef1_000 * c1 * c2 * s3 * s4
              + kCoef1_000 * c1 * s2 * s3 * c4
              - kCoef1_000 * s1 * c2 * c3 * s4
              + kCoef1_000 * s1 * s2 * c3 * c4
              - kCoef2_880 * c1 * c2 * c3 * s4
              + kCoef2_880 * c1 * s2 * c3 * c4
              + kCoef2_880 * s1 * c2 * s3 * s4
              - kCoef2_880 * s1 * s2 * s3 * c4;
  j.dtheta_d4 = kCoef1_000 * c1 * c2 * c3 * c4
              + kCoef1_000 * c1 * s2 * c3 * s4
              - kCoef1_000 * s1 * c2 * s3 * c4
              - kCoef1_000 * s1 * s2 * s3 * s4
              - kCoef2_880 * c1 * c2 * s3 * c4
              - kCoef2_880 * c1 * s2 * s3 * s4
              - kCoef2_880 * s1 * c2 * c3 * c4
              - kCoef2_880 * s1 * s2 * c3 * s4;
  return j;
}

}  // namespace tiltgait
