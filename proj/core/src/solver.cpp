#include "tiltgait/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tiltgait/errors.hpp"
#include "tiltgait/singularity.hpp"

namespace tiltgait {

std::string_view to_string(PlaneLabel label) {
  switch (label) {
    case PlaneLabel::Plus: return "+";
    case PlaneLabel::Minus: return "-";
    case PlaneLabel::Intersection: return "?";
  }
  return "?";
}

std::optional<PlaneLabel> plane_label_from_string(std::string_view s) {
  if (s == "+") return PlaneLabel::Plus;
  if (s == "-") return PlaneLabel::Minus;
  if (s == "?") return PlaneLabel::Intersection;
  return std::nullopt;
}

namespace {

struct Residual {
  double r_phi, r_theta;
  double norm() const {
    return std::max(std::fabs(r_phi), std::fabs(r_theta));
  }
};

Residual rear_residual(const FrontPair& fp, double a3, double a4) {
  const GaitTrig t(fp.alpha1, fp.alpha2, a3, a4);
  return {eval_r_phi(t), eval_r_theta(t)};
}

}  // namespace

std::optional<RearRoot> refine_root(const FrontPair& fp, double seed3,
                                    double seed4, const SolverConfig& cfg) {
  double x3 = seed3;
  double x4 = seed4;
  Residual f = rear_residual(fp, x3, x4);

  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    // Hard floor well below the accept tolerance; a couple of extra Newton
    // steps polish roots to machine precision nearly for free.
    if (f.norm() < 1e-14) break;

    const GaitTrig t(fp.alpha1, fp.alpha2, x3, x4);
    const RearJacobian j = rear_jacobian(t);
    const double det = j.dphi_d3 * j.dtheta_d4 - j.dphi_d4 * j.dtheta_d3;
    if (std::fabs(det) < 1e-14) return std::nullopt;

    const double dx3 = (-f.r_phi * j.dtheta_d4 + f.r_theta * j.dphi_d4) / det;
    const double dx4 = (-f.r_theta * j.dphi_d3 + f.r_phi * j.dtheta_d3) / det;

    // Step halving on residual increase.
    double lambda = 1.0;
    double n3 = x3, n4 = x4;
    Residual nf = f;
    for (int halving = 0; halving < 30; ++halving) {
      n3 = x3 + lambda * dx3;
      n4 = x4 + lambda * dx4;
      nf = rear_residual(fp, n3, n4);
      if (nf.norm() <= f.norm()) break;
      lambda *= 0.5;
    }
    if (nf.norm() > f.norm()) return std::nullopt;  // damping failed

    const double step = std::max(std::fabs(n3 - x3), std::fabs(n4 - x4));
    x3 = n3;
    x4 = n4;
    f = nf;
    if (step < cfg.newton_step_tol) break;
  }

  if (f.norm() > cfg.newton_residual_tol) return std::nullopt;
  if (!in_tilt_domain(x3) || !in_tilt_domain(x4)) return std::nullopt;
  return RearRoot{x3, x4, f.norm()};
}

std::vector<RearRoot> find_rear_roots(const FrontPair& fp,
                                      const SolverConfig& cfg) {
  std::vector<RearRoot> found;

  const int n = std::max(2, cfg.seed_grid_n);
  const double step = kPi / (n - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double s3 = -kHalfPi + i * step;
      const double s4 = -kHalfPi + j * step;
      if (auto r = refine_root(fp, s3, s4, cfg)) found.push_back(*r);
    }
  }
  // The rear pair equal to the front pair is always a root; seed it
  // explicitly so it can never be missed by the grid.
  if (auto r = refine_root(fp, fp.alpha1, fp.alpha2, cfg)) {
    found.push_back(*r);
  }

  if (found.empty()) {
    throw NoConvergence("find_rear_roots: no seed converged");
  }

  std::sort(found.begin(), found.end(), [](const RearRoot& a, const RearRoot& b) {
    if (a.alpha3 != b.alpha3) return a.alpha3 < b.alpha3;
    return a.alpha4 < b.alpha4;
  });

  std::vector<RearRoot> unique;
  for (const RearRoot& r : found) {
    bool duplicate = false;
    for (const RearRoot& u : unique) {
      const double d = std::hypot(r.alpha3 - u.alpha3, r.alpha4 - u.alpha4);
      if (d <= cfg.dedup_radius) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) unique.push_back(r);
  }
  return unique;
}

namespace {

// Nearest root to (a3, a4) at fp: Newton from the old root first, full
// multi-start as fallback. Returns the match and its distance.
std::optional<std::pair<RearRoot, double>> nearest_root(
    const FrontPair& fp, double a3, double a4, const SolverConfig& cfg) {
  if (auto direct = refine_root(fp, a3, a4, cfg)) {
    const double d = std::hypot(direct->alpha3 - a3, direct->alpha4 - a4);
    if (d <= cfg.branch_match_radius) return std::make_pair(*direct, d);
  }
  std::vector<RearRoot> all;
  try {
    all = find_rear_roots(fp, cfg);
  } catch (const NoConvergence&) {
    return std::nullopt;
  }
  const RearRoot* best = nullptr;
  double best_d = std::numeric_limits<double>::infinity();
  for (const RearRoot& r : all) {
    const double d = std::hypot(r.alpha3 - a3, r.alpha4 - a4);
    if (d < best_d) {
      best_d = d;
      best = &r;
    }
  }
  if (best == nullptr || best_d > cfg.branch_match_radius) return std::nullopt;
  return std::make_pair(*best, best_d);
}

PlaneLabel label_from_slope(double slope, double threshold) {
  if (slope > threshold) return PlaneLabel::Plus;
  if (slope < -threshold) return PlaneLabel::Minus;
  return PlaneLabel::Intersection;
}

}  // namespace

ClassifyOutcome classify_root(const FrontPair& fp, double alpha3,
                              double alpha4, const SolverConfig& cfg) {
  ClassifyOutcome out;
  const double h = cfg.classify_step;

  // slope of alpha3 w.r.t. alpha1
  {
    const bool up_ok = fp.alpha1 + h <= kHalfPi + kTiltDomainSlack;
    const bool dn_ok = fp.alpha1 - h >= -kHalfPi - kTiltDomainSlack;
    std::optional<std::pair<RearRoot, double>> up, dn;
    if (up_ok) up = nearest_root(FrontPair(fp.alpha1 + h, fp.alpha2), alpha3, alpha4, cfg);
    if (dn_ok) dn = nearest_root(FrontPair(fp.alpha1 - h, fp.alpha2), alpha3, alpha4, cfg);
    if (up_ok && dn_ok && up && dn) {
      out.slope3 = (up->first.alpha3 - dn->first.alpha3) / (2 * h);
    } else if (up_ok && up) {
      out.slope3 = (up->first.alpha3 - alpha3) / h;
    } else if (dn_ok && dn) {
      out.slope3 = (alpha3 - dn->first.alpha3) / h;
    } else {
      out.branch_lost3 = true;
    }
    out.label3 = out.branch_lost3 ? PlaneLabel::Intersection
                                  : label_from_slope(out.slope3, cfg.slope_threshold);
  }

  // slope of alpha4 w.r.t. alpha2
  {
    const bool up_ok = fp.alpha2 + h <= kHalfPi + kTiltDomainSlack;
    const bool dn_ok = fp.alpha2 - h >= -kHalfPi - kTiltDomainSlack;
    std::optional<std::pair<RearRoot, double>> up, dn;
    if (up_ok) up = nearest_root(FrontPair(fp.alpha1, fp.alpha2 + h), alpha3, alpha4, cfg);
    if (dn_ok) dn = nearest_root(FrontPair(fp.alpha1, fp.alpha2 - h), alpha3, alpha4, cfg);
    if (up_ok && dn_ok && up && dn) {
      out.slope4 = (up->first.alpha4 - dn->first.alpha4) / (2 * h);
    } else if (up_ok && up) {
      out.slope4 = (up->first.alpha4 - alpha4) / h;
    } else if (dn_ok && dn) {
      out.slope4 = (alpha4 - dn->first.alpha4) / h;
    } else {
      out.branch_lost4 = true;
    }
    out.label4 = out.branch_lost4 ? PlaneLabel::Intersection
                                  : label_from_slope(out.slope4, cfg.slope_threshold);
  }

  return out;
}

std::vector<LabeledRoot> solve_rear_angles(const FrontPair& fp,
                                           const SolverConfig& cfg) {
  const std::vector<RearRoot> roots = find_rear_roots(fp, cfg);
  std::vector<LabeledRoot> out;
  out.reserve(roots.size());
  for (const RearRoot& r : roots) {
    const ClassifyOutcome c = classify_root(fp, r.alpha3, r.alpha4, cfg);
    LabeledRoot lr;
    lr.alpha3 = r.alpha3;
    lr.alpha4 = r.alpha4;
    lr.label3 = c.label3;
    lr.label4 = c.label4;
    lr.branch_lost3 = c.branch_lost3;
    lr.branch_lost4 = c.branch_lost4;
    lr.r_value = eval_r(GaitTrig(fp.alpha1, fp.alpha2, r.alpha3, r.alpha4));
    lr.residual = rear_residual(fp, r.alpha3, r.alpha4).norm();
    out.push_back(lr);
  }
  return out;
}

}  // namespace tiltgait
