#include "tiltgait/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "tiltgait/version.hpp"

namespace tiltgait {

using nlohmann::json;
using nlohmann::ordered_json;

double round_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string format_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

double r12(double v) { return round_sig12(v); }

ordered_json header() {
  ordered_json j;
  j["tool"] = std::string(kToolName);
  j["version"] = std::string(kVersion);
  return j;
}

ordered_json root_to_json(const LabeledRoot& r) {
  ordered_json j;
  j["alpha3"] = r12(r.alpha3);
  j["alpha4"] = r12(r.alpha4);
  j["label3"] = std::string(to_string(r.label3));
  j["label4"] = std::string(to_string(r.label4));
  j["r_value"] = r12(r.r_value);
  j["residual"] = r12(r.residual);
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string atlas_to_json(const SurfaceAtlas& atlas) {
  ordered_json j = header();
  j["grid_n"] = atlas.grid.n;
  j["spacing_rad"] = r12(atlas.grid.spacing());
  ordered_json points = ordered_json::array();
  for (const AtlasPoint& pt : atlas.points) {
    ordered_json p;
    p["i"] = pt.i;
    p["j"] = pt.j;
    p["alpha1"] = r12(pt.fp.alpha1);
    p["alpha2"] = r12(pt.fp.alpha2);
    ordered_json roots = ordered_json::array();
    for (const LabeledRoot& r : pt.roots) roots.push_back(root_to_json(r));
    p["roots"] = std::move(roots);
    p["root_count"] = pt.root_count();
    if (!pt.warnings.empty()) p["warnings"] = pt.warnings;
    points.push_back(std::move(p));
  }
  j["points"] = std::move(points);
  return dump(j);
}

std::string atlas_roots_to_csv(const SurfaceAtlas& atlas) {
  std::ostringstream out;
  out << "# " << kToolName << " " << kVersion << "\n";
  out << "i,j,alpha1,alpha2,root_index,alpha3,alpha4,label3,label4,r_value,"
         "residual\n";
  for (const AtlasPoint& pt : atlas.points) {
    for (std::size_t k = 0; k < pt.roots.size(); ++k) {
      const LabeledRoot& r = pt.roots[k];
      out << pt.i << ',' << pt.j << ',' << format_sig12(pt.fp.alpha1) << ','
          << format_sig12(pt.fp.alpha2) << ',' << k << ','
          << format_sig12(r.alpha3) << ',' << format_sig12(r.alpha4) << ','
          << to_string(r.label3) << ',' << to_string(r.label4) << ','
          << format_sig12(r.r_value) << ',' << format_sig12(r.residual)
          << '\n';
    }
  }
  return out.str();
}

std::string paint_to_csv(const PaintMap& map) {
  std::ostringstream out;
  out << "# " << kToolName << " " << kVersion << "\n";
  out << "i,j,alpha1,alpha2,red,blue,other\n";
  for (int i = 0; i < map.grid.n; ++i) {
    for (int j = 0; j < map.grid.n; ++j) {
      const ColorAvailability& c = map.at(i, j);
      out << i << ',' << j << ',' << format_sig12(map.grid.coord(i)) << ','
          << format_sig12(map.grid.coord(j)) << ',' << (c.red ? 1 : 0) << ','
          << (c.blue ? 1 : 0) << ',';
      for (std::size_t k = 0; k < c.other_negative_types.size(); ++k) {
        if (k) out << ';';
        out << '(' << to_string(c.other_negative_types[k].first) << ','
            << to_string(c.other_negative_types[k].second) << ')';
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string triangle_report_to_json(const TriangleReport& report) {
  ordered_json j = header();
  auto claim = [](const TriangleClaim& c) {
    ordered_json t = ordered_json::array();
    for (const auto& v : c.vertices) {
      t.push_back({r12(v[0]), r12(v[1])});
    }
    return t;
  };
  j["positive_triangle"] = claim(report.positive_claim);
  j["negative_triangle"] = claim(report.negative_claim);
  j["points_checked"] = report.points_checked;
  j["positive_mismatches"] = report.positive_mismatches;
  j["negative_mismatches"] = report.negative_mismatches;
  ordered_json rows = ordered_json::array();
  for (const TriangleMismatchRow& r : report.rows) {
    ordered_json row;
    row["i"] = r.i;
    row["j"] = r.j;
    row["alpha1"] = r12(r.alpha1);
    row["alpha2"] = r12(r.alpha2);
    row["has_positive_root"] = r.has_positive_root;
    row["inside_positive_triangle"] = r.inside_positive_triangle;
    row["has_negative_root"] = r.has_negative_root;
    row["inside_negative_triangle"] = r.inside_negative_triangle;
    rows.push_back(std::move(row));
  }
  j["mismatches"] = std::move(rows);
  return dump(j);
}

std::string gait_to_json(const Gait& g, const GaitProvenance& prov) {
  ordered_json j = header();
  j["name"] = g.name;
  j["period_s"] = r12(g.period_s);
  j["closed"] = g.closed;
  ordered_json samples = ordered_json::array();
  for (const GaitSample& s : g.samples) {
    ordered_json e;
    e["t"] = r12(s.t);
    e["alpha"] = {r12(s.point.alpha1), r12(s.point.alpha2), r12(s.point.alpha3),
                  r12(s.point.alpha4)};
    samples.push_back(std::move(e));
  }
  j["samples"] = std::move(samples);
  ordered_json p;
  p["kind"] = prov.kind;
  if (prov.kind == "rect") {
    p["branch"] = prov.branch;
    p["alpha1_range"] = {r12(prov.alpha1_range[0]), r12(prov.alpha1_range[1])};
    p["alpha2_range"] = {r12(prov.alpha2_range[0]), r12(prov.alpha2_range[1])};
    p["sample_count"] = prov.sample_count;
  } else if (prov.kind == "bias") {
    p["source"] = prov.source;
    p["eta"] = r12(prov.eta);
  }
  j["provenance"] = std::move(p);
  return dump(j);
}

Gait gait_from_json(const std::string& text, GaitProvenance* provenance) {
  json j = json::parse(text);
  Gait g;
  g.name = j.at("name").get<std::string>();
  g.period_s = j.at("period_s").get<double>();
  g.closed = j.at("closed").get<bool>();
  double prev_t = -1.0;
  for (const json& e : j.at("samples")) {
    GaitSample s;
    s.t = e.at("t").get<double>();
    const json& a = e.at("alpha");
    if (a.size() != 4) {
      throw std::invalid_argument("gait_from_json: alpha must have 4 entries");
    }
    s.point = GaitPoint(a[0].get<double>(), a[1].get<double>(),
                        a[2].get<double>(), a[3].get<double>());
    if (s.t <= prev_t) {
      throw std::invalid_argument(
          "gait_from_json: sample times must be strictly increasing");
    }
    if (g.samples.empty() && s.t != 0.0) {
      throw std::invalid_argument("gait_from_json: first sample must be t=0");
    }
    prev_t = s.t;
    g.samples.push_back(s);
  }
  if (g.samples.empty()) {
    throw std::invalid_argument("gait_from_json: gait has no samples");
  }
  if (provenance && j.contains("provenance")) {
    const json& p = j["provenance"];
    provenance->kind = p.value("kind", "external");
    provenance->branch = p.value("branch", "");
    provenance->source = p.value("source", "");
    provenance->eta = p.value("eta", 0.0);
  }
  return g;
}

std::string validation_report_to_json(const ValidationReport& report) {
  ordered_json j = header();
  j["verdict"] = report.valid() ? "valid" : "invalid";
  j["closed"] = report.closed;
  j["closure_ok"] = report.closure_ok;
  j["sign_constant"] = report.sign_constant;
  j["r_sign"] = report.r_sign;
  j["max_front_step"] = r12(report.max_front_step);
  j["max_rear_jump"] = r12(report.max_rear_jump);
  ordered_json v = ordered_json::array();
  for (const Violation& viol : report.violations) {
    ordered_json e;
    e["from"] = viol.from_index;
    e["to"] = viol.to_index;
    e["rule"] = viol.rule;
    e["detail"] = viol.detail;
    v.push_back(std::move(e));
  }
  j["violations"] = std::move(v);
  return dump(j);
}

std::string contours_to_csv(const std::vector<const ContourSet*>& sets) {
  std::ostringstream out;
  out << "# " << kToolName << " " << kVersion << "\n";
  out << "gait,t_index,polyline_id,point_index,phi,theta\n";
  for (const ContourSet* set : sets) {
    for (const TaggedPolyline& p : set->polylines) {
      for (std::size_t k = 0; k < p.line.points.size(); ++k) {
        const Attitude& a = p.line.points[k];
        out << set->gait_name << ',' << p.t_index << ',' << p.polyline_id
            << ',' << k << ',' << format_sig12(a.phi) << ','
            << format_sig12(a.theta) << '\n';
      }
    }
  }
  return out.str();
}

std::string contours_to_svg(const std::vector<const ContourSet*>& sets) {
  const double size = 640.0;
  const double scale = size / kPi;  // attitude square spans [-pi/2, pi/2]
  auto X = [&](double phi) { return (phi + kHalfPi) * scale; };
  auto Y = [&](double theta) { return (kHalfPi - theta) * scale; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<!-- " << kToolName << " " << kVersion << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size
      << "\">\n";
  out << "  <rect width=\"" << size << "\" height=\"" << size
      << "\" fill=\"white\" stroke=\"black\"/>\n";
  // axes through the origin
  out << "  <line x1=\"0\" y1=\"" << size / 2 << "\" x2=\"" << size
      << "\" y2=\"" << size / 2 << "\" stroke=\"#cccccc\"/>\n";
  out << "  <line x1=\"" << size / 2 << "\" y1=\"0\" x2=\"" << size / 2
      << "\" y2=\"" << size << "\" stroke=\"#cccccc\"/>\n";

  const char* colors[] = {"red", "blue", "green", "orange"};
  for (std::size_t s = 0; s < sets.size(); ++s) {
    const char* color = colors[s < 4 ? s : 3];
    for (const TaggedPolyline& p : sets[s]->polylines) {
      if (p.line.points.empty()) continue;
      out << "  <path fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1\" d=\"";
      for (std::size_t k = 0; k < p.line.points.size(); ++k) {
        const Attitude& a = p.line.points[k];
        out << (k == 0 ? "M" : " L") << format_sig12(X(a.phi)) << " "
            << format_sig12(Y(a.theta));
      }
      if (p.line.closed) out << " Z";
      out << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

namespace {

ordered_json margin_json(const RobustnessMargin& m) {
  ordered_json j;
  if (m.unbounded()) {
    j["value"] = "unbounded";
  } else {
    j["value"] = r12(*m.value);
    j["attained_at"] = {r12(m.attained_at->phi), r12(m.attained_at->theta)};
  }
  return j;
}

}  // namespace

std::string margin_to_json(const ContourSet& contours,
                           const RobustnessMargin& margin) {
  ordered_json j = header();
  j["gait"] = contours.gait_name;
  j["source"] = contours.source;
  j["grid_resolution"] = contours.grid_resolution;
  j["time_samples"] = contours.time_samples;
  j["polylines"] = contours.polylines.size();
  j["points"] = contours.total_points();
  j["margin"] = margin_json(margin);
  return dump(j);
}

std::string comparison_to_json(const GaitComparison& cmp) {
  ordered_json j = header();
  j["gait_a"] = cmp.contours_a.gait_name;
  j["gait_b"] = cmp.contours_b.gait_name;
  j["margin_a"] = margin_json(cmp.margin_a);
  j["margin_b"] = margin_json(cmp.margin_b);
  if (cmp.difference) {
    j["difference"] = r12(*cmp.difference);
  } else {
    j["difference"] = "unbounded";
  }
  j["grid_resolution"] = cmp.contours_a.grid_resolution;
  j["time_samples"] = cmp.contours_a.time_samples;
  return dump(j);
}

}  // namespace tiltgait
