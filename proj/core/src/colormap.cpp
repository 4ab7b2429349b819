#include "tiltgait/colormap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tiltgait/errors.hpp"
#include "tiltgait/singularity.hpp"

namespace tiltgait {

std::string_view to_string(ColorChoice c) {
  return c == ColorChoice::Red ? "red" : "blue";
}

std::optional<ColorChoice> color_from_string(std::string_view s) {
  if (s == "red") return ColorChoice::Red;
  if (s == "blue") return ColorChoice::Blue;
  return std::nullopt;
}

bool RootType::allowed(PlaneLabel l3, PlaneLabel l4) {
  const bool forbidden =
      (l3 == PlaneLabel::Plus && l4 == PlaneLabel::Minus) ||
      (l3 == PlaneLabel::Minus && l4 == PlaneLabel::Plus);
  return !forbidden;
}

RootType RootType::make(PlaneLabel l3, PlaneLabel l4) {
  if (!allowed(l3, l4)) {
    throw std::invalid_argument("RootType: (+,-) and (-,+) do not occur");
  }
  return RootType{l3, l4};
}

std::optional<RootType> RootType::try_make(PlaneLabel l3, PlaneLabel l4) {
  if (!allowed(l3, l4)) return std::nullopt;
  return RootType{l3, l4};
}

RootType color_type(ColorChoice c) {
  return c == ColorChoice::Red
             ? RootType{PlaneLabel::Plus, PlaneLabel::Plus}
             : RootType{PlaneLabel::Minus, PlaneLabel::Minus};
}

bool label_adjacency_allowed(PlaneLabel a, PlaneLabel b) {
  return a == b || a == PlaneLabel::Intersection ||
         b == PlaneLabel::Intersection;
}

bool type_adjacency_allowed(const RootType& a, const RootType& b) {
  return label_adjacency_allowed(a.label3, b.label3) &&
         label_adjacency_allowed(a.label4, b.label4);
}

namespace {

std::string label_pair(const LabeledRoot& r) {
  std::string s = "(";
  s += to_string(r.label3);
  s += ",";
  s += to_string(r.label4);
  s += ")";
  return s;
}

struct StepCheck {
  double front_step;  // max-norm front delta
  double rear_jump;   // Euclidean rear delta
};

}  // namespace

ValidationReport validate_gait_path(std::span<const PathSample> path,
                                    bool closed,
                                    std::optional<ColorChoice> color,
                                    const ValidatorConfig& vcfg) {
  ValidationReport report;
  report.closed = closed;
  if (path.empty()) {
    report.violations.push_back({0, 0, "empty-path", "path has no samples"});
    return report;
  }

  const std::size_t n = path.size();

  // Sampling granularity is a precondition, not a verdict.
  const std::size_t pair_count = closed && n > 1 ? n : n - 1;
  for (std::size_t k = 0; k < pair_count; ++k) {
    const PathSample& a = path[k];
    const PathSample& b = path[(k + 1) % n];
    const double d1 = std::fabs(b.fp.alpha1 - a.fp.alpha1);
    const double d2 = std::fabs(b.fp.alpha2 - a.fp.alpha2);
    if (d1 > vcfg.max_front_step + vcfg.front_step_slack ||
        d2 > vcfg.max_front_step + vcfg.front_step_slack) {
      std::ostringstream msg;
      msg << "front step " << std::max(d1, d2) << " rad at sample " << k
          << " exceeds granularity " << vcfg.max_front_step;
      throw PathTooCoarse(msg.str(), k);
    }
  }

  // (b) each chosen root must solve the surface equations
  for (std::size_t k = 0; k < n; ++k) {
    const PathSample& s = path[k];
    const GaitTrig t(s.fp.alpha1, s.fp.alpha2, s.root.alpha3, s.root.alpha4);
    const double res =
        std::max(std::fabs(eval_r_phi(t)), std::fabs(eval_r_theta(t)));
    if (res > vcfg.residual_tol) {
      std::ostringstream msg;
      msg << "surface residual " << res << " exceeds " << vcfg.residual_tol;
      report.violations.push_back({k, k, "off-surface", msg.str()});
    }
  }

  // (c) sign of r must be constant along the path
  int sign = 0;
  bool sign_ok = true;
  for (std::size_t k = 0; k < n; ++k) {
    const PathSample& s = path[k];
    const double r =
        eval_r(GaitTrig(s.fp.alpha1, s.fp.alpha2, s.root.alpha3, s.root.alpha4));
    const int rs = r > 0.0 ? 1 : (r < 0.0 ? -1 : 0);
    if (rs == 0) {
      report.violations.push_back({k, k, "zero-r", "r vanishes at sample"});
      sign_ok = false;
    } else if (sign == 0) {
      sign = rs;
    } else if (rs != sign) {
      std::ostringstream msg;
      msg << "r changes sign (" << (sign > 0 ? "+" : "-") << " -> "
          << (rs > 0 ? "+" : "-") << ")";
      report.violations.push_back({k, k, "sign-flip", msg.str()});
      sign_ok = false;
    }
  }
  report.sign_constant = sign_ok && sign != 0;
  report.r_sign = report.sign_constant ? sign : 0;

  // color restriction: each sample carries the color's type, and colored
  // paths live in the negative-r region
  if (color) {
    const RootType want = color_type(*color);
    for (std::size_t k = 0; k < n; ++k) {
      const LabeledRoot& r = path[k].root;
      if (r.label3 != want.label3 || r.label4 != want.label4) {
        report.violations.push_back(
            {k, k, "color-mismatch",
             label_pair(r) + " is not the " + std::string(to_string(*color)) +
                 " type"});
      }
    }
    if (report.sign_constant && report.r_sign > 0) {
      report.violations.push_back(
          {0, 0, "color-outside-negative-region",
           "colored paths require r < 0 along the path"});
    }
  }

  // (a) adjacency rule and (d) discrete continuity between consecutive picks
  for (std::size_t k = 0; k < pair_count; ++k) {
    const std::size_t k2 = (k + 1) % n;
    const PathSample& a = path[k];
    const PathSample& b = path[k2];
    const bool wrap_pair = closed && k2 == 0 && n > 1;

    bool pair_ok = true;

    const auto ta = RootType::try_make(a.root.label3, a.root.label4);
    const auto tb = RootType::try_make(b.root.label3, b.root.label4);
    if (!ta || !tb) {
      report.violations.push_back(
          {k, k2, "forbidden-type",
           label_pair(!ta ? a.root : b.root) + " is not a valid root type"});
      pair_ok = false;
    } else if (!type_adjacency_allowed(*ta, *tb)) {
      report.violations.push_back(
          {k, k2, "adjacency",
           label_pair(a.root) + " -> " + label_pair(b.root) +
               " hops between branches without a \"?\" intermediate"});
      pair_ok = false;
    }

    const double front =
        std::hypot(b.fp.alpha1 - a.fp.alpha1, b.fp.alpha2 - a.fp.alpha2);
    const double rear =
        std::hypot(b.root.alpha3 - a.root.alpha3, b.root.alpha4 - a.root.alpha4);
    report.max_front_step = std::max(report.max_front_step, front);
    report.max_rear_jump = std::max(report.max_rear_jump, rear);
    if (rear > vcfg.continuity_bound * front + vcfg.rear_jump_slack) {
      std::ostringstream msg;
      msg << "rear step " << rear << " exceeds " << vcfg.continuity_bound
          << " * front step " << front;
      report.violations.push_back({k, k2, "continuity", msg.str()});
      pair_ok = false;
    }

    if (wrap_pair && !pair_ok) report.closure_ok = false;
  }

  return report;
}

std::vector<LabeledRoot> continue_branch(std::span<const FrontPair> path,
                                         double initial_alpha3,
                                         double initial_alpha4,
                                         const SolverConfig& cfg) {
  if (path.empty()) return {};

  auto first = refine_root(path[0], initial_alpha3, initial_alpha4, cfg);
  if (!first) {
    throw NoConvergence("continue_branch: initial root does not refine", 0);
  }
  {
    const double d = std::hypot(first->alpha3 - initial_alpha3,
                                first->alpha4 - initial_alpha4);
    if (d > cfg.branch_match_radius) {
      throw BranchJump("continue_branch: initial root is not on a branch", 0, d);
    }
  }

  std::vector<LabeledRoot> out;
  out.reserve(path.size());
  double a3 = first->alpha3;
  double a4 = first->alpha4;

  for (std::size_t k = 0; k < path.size(); ++k) {
    std::optional<RearRoot> next;
    if (k == 0) {
      next = first;
    } else {
      next = refine_root(path[k], a3, a4, cfg);
      if (!next) {
        // seed failed outright; try the full root set
        std::vector<RearRoot> all;
        try {
          all = find_rear_roots(path[k], cfg);
        } catch (const NoConvergence&) {
          throw NoConvergence("continue_branch: no root at sample", k);
        }
        double best = std::numeric_limits<double>::infinity();
        for (const RearRoot& r : all) {
          const double d = std::hypot(r.alpha3 - a3, r.alpha4 - a4);
          if (d < best) {
            best = d;
            next = r;
          }
        }
      }
      const double jump = std::hypot(next->alpha3 - a3, next->alpha4 - a4);
      if (jump > cfg.branch_match_radius) {
        std::ostringstream msg;
        msg << "continue_branch: nearest root jumped " << jump
            << " rad at sample " << k;
        throw BranchJump(msg.str(), k, jump);
      }
    }

    a3 = next->alpha3;
    a4 = next->alpha4;

    const ClassifyOutcome c = classify_root(path[k], a3, a4, cfg);
    LabeledRoot lr;
    lr.alpha3 = a3;
    lr.alpha4 = a4;
    lr.label3 = c.label3;
    lr.label4 = c.label4;
    lr.branch_lost3 = c.branch_lost3;
    lr.branch_lost4 = c.branch_lost4;
    lr.r_value = eval_r(GaitTrig(path[k].alpha1, path[k].alpha2, a3, a4));
    lr.residual = std::max(
        std::fabs(eval_r_phi(GaitTrig(path[k].alpha1, path[k].alpha2, a3, a4))),
        std::fabs(eval_r_theta(GaitTrig(path[k].alpha1, path[k].alpha2, a3, a4))));
    out.push_back(lr);
  }
  return out;
}

}  // namespace tiltgait
