#include "tiltgait/gait.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tiltgait/errors.hpp"
#include "tiltgait/singularity.hpp"

namespace tiltgait {

std::string_view to_string(BranchSelect b) {
  switch (b) {
    case BranchSelect::Blue: return "blue";
    case BranchSelect::Red: return "red";
    case BranchSelect::Identity: return "identity";
  }
  return "identity";
}

std::optional<BranchSelect> branch_from_string(std::string_view s) {
  if (s == "blue") return BranchSelect::Blue;
  if (s == "red") return BranchSelect::Red;
  if (s == "identity") return BranchSelect::Identity;
  return std::nullopt;
}

void RectangleSpec::validate() const {
  if (!(alpha1_lo < alpha1_hi) || !(alpha2_lo < alpha2_hi)) {
    throw std::invalid_argument("RectangleSpec: ranges must satisfy lo < hi");
  }
  if (!in_tilt_domain(alpha1_lo) || !in_tilt_domain(alpha1_hi) ||
      !in_tilt_domain(alpha2_lo) || !in_tilt_domain(alpha2_hi)) {
    throw std::invalid_argument(
        "RectangleSpec: ranges must lie inside [-pi/2, pi/2]");
  }
  if (sample_count < 8) {
    throw std::invalid_argument("RectangleSpec: sample_count must be >= 8");
  }
  if (!(period_s > 0.0)) {
    throw std::invalid_argument("RectangleSpec: period must be positive");
  }
}

namespace {

// Perimeter position at arc length s, counterclockwise from (lo, lo).
FrontPair perimeter_point(const RectangleSpec& spec, double s) {
  const double w = spec.alpha1_hi - spec.alpha1_lo;
  const double h = spec.alpha2_hi - spec.alpha2_lo;
  if (s < w) return {spec.alpha1_lo + s, spec.alpha2_lo};
  s -= w;
  if (s < h) return {spec.alpha1_hi, spec.alpha2_lo + s};
  s -= h;
  if (s < w) return {spec.alpha1_hi - s, spec.alpha2_hi};
  s -= w;
  return {spec.alpha1_lo, spec.alpha2_hi - s};
}

std::vector<FrontPair> perimeter_path(const RectangleSpec& spec) {
  const double w = spec.alpha1_hi - spec.alpha1_lo;
  const double h = spec.alpha2_hi - spec.alpha2_lo;
  const double perimeter = 2.0 * (w + h);
  std::vector<FrontPair> path;
  path.reserve(spec.sample_count);
  for (int k = 0; k < spec.sample_count; ++k) {
    double s = perimeter * k / spec.sample_count;
    if (!spec.counterclockwise && k > 0) s = perimeter - s;
    path.push_back(perimeter_point(spec, s));
  }
  return path;
}

LabeledRoot labeled_at(const FrontPair& fp, double a3, double a4,
                       const SolverConfig& cfg) {
  const ClassifyOutcome c = classify_root(fp, a3, a4, cfg);
  LabeledRoot lr;
  lr.alpha3 = a3;
  lr.alpha4 = a4;
  lr.label3 = c.label3;
  lr.label4 = c.label4;
  lr.branch_lost3 = c.branch_lost3;
  lr.branch_lost4 = c.branch_lost4;
  const GaitTrig t(fp.alpha1, fp.alpha2, a3, a4);
  lr.r_value = eval_r(t);
  lr.residual = std::max(std::fabs(eval_r_phi(t)), std::fabs(eval_r_theta(t)));
  return lr;
}

}  // namespace

Gait rectangle_gait(const RectangleSpec& spec, const SolverConfig& cfg) {
  spec.validate();
  const std::vector<FrontPair> fps = perimeter_path(spec);

  std::vector<LabeledRoot> rears;
  std::optional<ColorChoice> color;

  if (spec.branch == BranchSelect::Identity) {
    rears.reserve(fps.size());
    for (const FrontPair& fp : fps) {
      rears.push_back(labeled_at(fp, fp.alpha1, fp.alpha2, cfg));
    }
  } else {
    color = spec.branch == BranchSelect::Blue ? ColorChoice::Blue
                                              : ColorChoice::Red;
    const RootType want = color_type(*color);
    const std::vector<LabeledRoot> first = solve_rear_angles(fps[0], cfg);
    const LabeledRoot* pick = nullptr;
    for (const LabeledRoot& r : first) {
      if (r.label3 == want.label3 && r.label4 == want.label4 &&
          r.r_value < 0.0) {
        pick = &r;
        break;  // roots are ordered; take the first match
      }
    }
    if (pick == nullptr) {
      std::ostringstream msg;
      msg << "rectangle_gait: no " << to_string(*color)
          << " root with r < 0 at (" << fps[0].alpha1 << ", " << fps[0].alpha2
          << ")";
      throw BranchUnavailable(msg.str(), 0);
    }
    rears = continue_branch(fps, pick->alpha3, pick->alpha4, cfg);
  }

  // Wrap-around: continuing past the last sample must land back on the
  // first root.
  {
    const LabeledRoot& last = rears.back();
    const auto wrap = refine_root(fps[0], last.alpha3, last.alpha4, cfg);
    const double gap =
        wrap ? std::hypot(wrap->alpha3 - rears[0].alpha3,
                          wrap->alpha4 - rears[0].alpha4)
             : std::numeric_limits<double>::infinity();
    if (gap > 1e-8) {
      ValidationReport r;
      r.closed = true;
      r.closure_ok = false;
      r.violations.push_back(
          {fps.size() - 1, 0, "wrap",
           "wrap-around continuation does not return to the first root"});
      throw GaitValidationError("rectangle_gait: gait does not close", r);
    }
  }

  std::vector<PathSample> path;
  path.reserve(fps.size());
  for (std::size_t k = 0; k < fps.size(); ++k) {
    path.push_back({fps[k], rears[k]});
  }
  ValidationReport report = validate_gait_path(path, /*closed=*/true, color);
  if (!report.valid()) {
    throw GaitValidationError("rectangle_gait: path validation failed",
                              std::move(report));
  }

  Gait gait;
  gait.name = spec.name;
  gait.period_s = spec.period_s;
  gait.closed = true;
  gait.samples.reserve(fps.size());
  for (std::size_t k = 0; k < fps.size(); ++k) {
    GaitSample s;
    s.t = spec.period_s * static_cast<double>(k) /
          static_cast<double>(spec.sample_count);
    s.point = GaitPoint(fps[k].alpha1, fps[k].alpha2, rears[k].alpha3,
                        rears[k].alpha4);
    gait.samples.push_back(s);
  }
  return gait;
}

Gait bias_gait(const Gait& g, const BiasSpec& bias) {
  Gait out;
  out.name = g.name + "-biased";
  out.period_s = g.period_s;
  out.closed = g.closed;
  out.samples.reserve(g.samples.size());
  for (const GaitSample& s : g.samples) {
    GaitSample b;
    b.t = s.t;
    b.point = GaitPoint(s.point.alpha1, s.point.alpha2,
                        bias.eta * s.point.alpha3, bias.eta * s.point.alpha4);
    out.samples.push_back(b);
  }
  return out;
}

std::vector<GaitPoint> gait_vertices(const Gait& g, double tol) {
  std::vector<GaitPoint> vertices;
  if (g.samples.empty()) return vertices;

  double lo[4], hi[4];
  for (int c = 0; c < 4; ++c) {
    lo[c] = std::numeric_limits<double>::infinity();
    hi[c] = -std::numeric_limits<double>::infinity();
  }
  auto comp = [](const GaitPoint& p, int c) {
    switch (c) {
      case 0: return p.alpha1;
      case 1: return p.alpha2;
      case 2: return p.alpha3;
      default: return p.alpha4;
    }
  };
  for (const GaitSample& s : g.samples) {
    for (int c = 0; c < 4; ++c) {
      lo[c] = std::min(lo[c], comp(s.point, c));
      hi[c] = std::max(hi[c], comp(s.point, c));
    }
  }

  for (const GaitSample& s : g.samples) {
    bool extremal = true;
    for (int c = 0; c < 4 && extremal; ++c) {
      const double v = comp(s.point, c);
      extremal = std::fabs(v - lo[c]) <= tol || std::fabs(v - hi[c]) <= tol;
    }
    if (!extremal) continue;
    if (std::find(vertices.begin(), vertices.end(), s.point) ==
        vertices.end()) {
      vertices.push_back(s.point);
    }
  }

  std::sort(vertices.begin(), vertices.end(),
            [&](const GaitPoint& a, const GaitPoint& b) {
              for (int c = 0; c < 4; ++c) {
                if (comp(a, c) != comp(b, c)) return comp(a, c) < comp(b, c);
              }
              return false;
            });
  return vertices;
}

std::vector<FrontPair> front_path(const Gait& g) {
  std::vector<FrontPair> fps;
  fps.reserve(g.samples.size());
  for (const GaitSample& s : g.samples) {
    fps.emplace_back(s.point.alpha1, s.point.alpha2);
  }
  return fps;
}

ValidationReport validate_gait(const Gait& g, std::optional<ColorChoice> color,
                               const ValidatorConfig& vcfg,
                               const SolverConfig& scfg) {
  std::vector<PathSample> path;
  path.reserve(g.samples.size());
  for (const GaitSample& s : g.samples) {
    const FrontPair fp(s.point.alpha1, s.point.alpha2);
    const GaitTrig t(s.point.alpha1, s.point.alpha2, s.point.alpha3,
                     s.point.alpha4);
    const double res =
        std::max(std::fabs(eval_r_phi(t)), std::fabs(eval_r_theta(t)));
    if (res <= vcfg.residual_tol) {
      path.push_back({fp, labeled_at(fp, s.point.alpha3, s.point.alpha4, scfg)});
    } else {
      // Off-surface sample: the validator reports the residual violation;
      // labels would be meaningless, leave them "?".
      LabeledRoot lr;
      lr.alpha3 = s.point.alpha3;
      lr.alpha4 = s.point.alpha4;
      lr.r_value = eval_r(t);
      lr.residual = res;
      path.push_back({fp, lr});
    }
  }
  return validate_gait_path(path, g.closed, color, vcfg);
}

}  // namespace tiltgait
