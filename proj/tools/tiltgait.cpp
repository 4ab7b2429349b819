// Command-line front end: surface sweeps, per-point root queries, gait
// construction/validation, and singular-attitude analysis, all emitted as
// JSON/CSV/SVG files.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tiltgait/atlas.hpp"
#include "tiltgait/attitude_map.hpp"
#include "tiltgait/colormap.hpp"
#include "tiltgait/errors.hpp"
#include "tiltgait/gait.hpp"
#include "tiltgait/io.hpp"
#include "tiltgait/version.hpp"

namespace {

using namespace tiltgait;

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  // solver
  int seed_grid = 33;
  double newton_tol = 1e-10;
  double dedup_radius = 1e-6;
  // surface
  int grid_n = 17;
  // singular
  int grid_res = 401;
  int time_samples = 64;
  // shared
  int jobs = 1;
};

SolverConfig solver_config(const RunConfig& rc) {
  SolverConfig cfg;
  cfg.seed_grid_n = rc.seed_grid;
  cfg.newton_residual_tol = rc.newton_tol;
  cfg.dedup_radius = rc.dedup_radius;
  return cfg;
}

// Pre-scan for --config and load defaults before CLI11 parses overrides.
void apply_config_file(int argc, char** argv, RunConfig& rc) {
  std::string path;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string_view(argv[i]) == "--config") path = argv[i + 1];
  }
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) {
    throw CLI::ValidationError("--config", "cannot read " + path);
  }
  nlohmann::json j;
  in >> j;
  rc.seed_grid = j.value("seed-grid", rc.seed_grid);
  rc.newton_tol = j.value("newton-tol", rc.newton_tol);
  rc.dedup_radius = j.value("dedup-radius", rc.dedup_radius);
  rc.grid_n = j.value("grid-n", rc.grid_n);
  rc.grid_res = j.value("grid-res", rc.grid_res);
  rc.time_samples = j.value("time-samples", rc.time_samples);
  rc.jobs = j.value("jobs", rc.jobs);
}

int env_jobs() {
  if (const char* v = std::getenv("TILTGAIT_JOBS")) {
    const int n = std::atoi(v);
    if (n >= 1) return n;
  }
  return 1;
}

// Writes atomically enough for our purposes: nothing is created unless the
// directory exists and the full payload is ready.
void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  out << content;
  if (!out.good()) {
    throw std::runtime_error("write failed: " + path);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw CLI::ValidationError("range", "expected lo:hi, got " + text);
  }
  try {
    const double lo = std::stod(text.substr(0, colon));
    const double hi = std::stod(text.substr(colon + 1));
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected lo:hi, got " + text);
  }
}

Gait load_gait(const std::string& path) {
  return gait_from_json(read_file(path));
}

void print_margin(std::ostream& os, const std::string& name,
                  const RobustnessMargin& m) {
  os << "margin(" << name << ") = ";
  if (m.unbounded()) {
    os << "unbounded (no singular attitude on the grid)\n";
  } else {
    os << format_sig12(*m.value) << " rad at (phi="
       << format_sig12(m.attained_at->phi)
       << ", theta=" << format_sig12(m.attained_at->theta) << ")\n";
  }
}

// ---- surface ----------------------------------------------------------

int run_surface(const RunConfig& rc, const std::string& out_path,
                const std::string& roots_csv, const std::string& paint_csv,
                const std::string& report_path) {
  if (rc.grid_n < 2) {
    std::cerr << "error: --grid-n must be >= 2\n";
    return kExitUsage;
  }
  const SurfaceAtlas atlas =
      sweep_grid(solver_config(rc), GridSpec{rc.grid_n}, rc.jobs);

  // root-count table, alpha1 rows from -pi/2 upward
  std::cout << "root counts (" << rc.grid_n << "x" << rc.grid_n << "):\n";
  for (int i = 0; i < rc.grid_n; ++i) {
    for (int j = 0; j < rc.grid_n; ++j) {
      std::cout << atlas.at(i, j).root_count()
                << (j + 1 < rc.grid_n ? " " : "\n");
    }
  }

  const TriangleReport report = triangle_discrepancy(atlas);
  std::cout << "triangle claims: " << report.positive_mismatches
            << " positive-region mismatches, " << report.negative_mismatches
            << " negative-region mismatches over " << report.points_checked
            << " grid points\n";
  for (const TriangleMismatchRow& row : report.rows) {
    if (row.alpha1 == 0.0 && row.alpha2 == 0.0) {
      std::cout << "note: (0, 0) carries a positive-r root (identity, r = 4)"
                << " outside the claimed positive triangle\n";
    }
  }

  write_file(out_path, atlas_to_json(atlas));
  std::cout << "atlas written to " << out_path << "\n";
  if (!roots_csv.empty()) {
    write_file(roots_csv, atlas_roots_to_csv(atlas));
  }
  if (!paint_csv.empty()) {
    write_file(paint_csv, paint_to_csv(paint_map(atlas)));
  }
  if (!report_path.empty()) {
    write_file(report_path, triangle_report_to_json(report));
  }
  return kExitSuccess;
}

// ---- roots -------------------------------------------------------------

int run_roots(const RunConfig& rc, double a1, double a2) {
  const auto roots = solve_rear_angles(FrontPair(a1, a2), solver_config(rc));
  std::cout << "roots at (alpha1=" << format_sig12(a1)
            << ", alpha2=" << format_sig12(a2) << "): " << roots.size()
            << "\n";
  std::cout << "alpha3,alpha4,label3,label4,r_value,residual\n";
  for (const LabeledRoot& r : roots) {
    std::cout << format_sig12(r.alpha3) << ',' << format_sig12(r.alpha4)
              << ',' << to_string(r.label3) << ',' << to_string(r.label4)
              << ',' << format_sig12(r.r_value) << ','
              << format_sig12(r.residual) << "\n";
  }
  return kExitSuccess;
}

// ---- gait --------------------------------------------------------------

int run_gait_rect(const RunConfig& rc, const std::string& a1_range,
                  const std::string& a2_range, const std::string& color,
                  int samples, double period, const std::string& name,
                  const std::string& out_path) {
  const auto [a1_lo, a1_hi] = parse_range(a1_range);
  const auto [a2_lo, a2_hi] = parse_range(a2_range);
  const auto branch = branch_from_string(color);
  if (!branch) {
    std::cerr << "error: --color must be blue, red or identity\n";
    return kExitUsage;
  }
  RectangleSpec spec;
  spec.alpha1_lo = a1_lo;
  spec.alpha1_hi = a1_hi;
  spec.alpha2_lo = a2_lo;
  spec.alpha2_hi = a2_hi;
  spec.branch = *branch;
  spec.sample_count = samples;
  spec.period_s = period;
  spec.name = name;
  spec.validate();

  const Gait g = rectangle_gait(spec, solver_config(rc));

  GaitProvenance prov;
  prov.kind = "rect";
  prov.branch = std::string(to_string(spec.branch));
  prov.alpha1_range = {a1_lo, a1_hi};
  prov.alpha2_range = {a2_lo, a2_hi};
  prov.sample_count = samples;
  write_file(out_path, gait_to_json(g, prov));
  std::cout << "gait '" << g.name << "' (" << g.samples.size()
            << " samples, " << to_string(spec.branch) << " branch) written to "
            << out_path << "\n";
  return kExitSuccess;
}

int run_gait_bias(const std::string& in_path, double eta,
                  const std::string& name, const std::string& out_path) {
  const Gait g = load_gait(in_path);
  Gait biased = bias_gait(g, BiasSpec(eta));
  if (!name.empty()) biased.name = name;

  GaitProvenance prov;
  prov.kind = "bias";
  prov.source = g.name;
  prov.eta = eta;
  write_file(out_path, gait_to_json(biased, prov));
  std::cout << "biased gait '" << biased.name << "' (eta=" << eta
            << ") written to " << out_path << "\n";
  return kExitSuccess;
}

int run_gait_validate(const RunConfig& rc, const std::string& in_path,
                      const std::string& color,
                      const std::string& report_path) {
  const Gait g = load_gait(in_path);
  std::optional<ColorChoice> choice;
  if (!color.empty()) {
    choice = color_from_string(color);
    if (!choice) {
      std::cerr << "error: --color must be blue or red\n";
      return kExitUsage;
    }
  }
  const ValidationReport report =
      validate_gait(g, choice, {}, solver_config(rc));
  if (!report_path.empty()) {
    write_file(report_path, validation_report_to_json(report));
  }
  if (report.valid()) {
    std::cout << "valid: " << g.name << " (" << g.samples.size()
              << " samples, r sign " << (report.r_sign > 0 ? "+" : "-")
              << ")\n";
    return kExitSuccess;
  }
  std::cout << "invalid: " << g.name << ", " << report.violations.size()
            << " violation(s)\n";
  for (std::size_t k = 0; k < report.violations.size() && k < 10; ++k) {
    const Violation& v = report.violations[k];
    std::cout << "  [" << v.from_index << "->" << v.to_index << "] " << v.rule
              << ": " << v.detail << "\n";
  }
  return kExitFailure;
}

int run_gait_vertices(const std::string& in_path,
                      const std::string& out_path) {
  const Gait g = load_gait(in_path);
  const auto vertices = gait_vertices(g);
  std::cout << "vertices of '" << g.name << "': " << vertices.size() << "\n";
  std::cout << "alpha1,alpha2,alpha3,alpha4\n";
  std::ostringstream csv;
  csv << "# " << kToolName << " " << kVersion << "\n";
  csv << "alpha1,alpha2,alpha3,alpha4\n";
  for (const GaitPoint& p : vertices) {
    std::ostringstream line;
    line << format_sig12(p.alpha1) << ',' << format_sig12(p.alpha2) << ','
         << format_sig12(p.alpha3) << ',' << format_sig12(p.alpha4) << "\n";
    std::cout << line.str();
    csv << line.str();
  }
  if (!out_path.empty()) write_file(out_path, csv.str());
  return kExitSuccess;
}

// ---- singular ----------------------------------------------------------

int run_singular(const RunConfig& rc, const std::string& in_path,
                 const std::string& compare_path, const std::string& prefix,
                 bool svg) {
  AttitudeGrid grid;
  grid.resolution = rc.grid_res;
  grid.validate();

  const Gait a = load_gait(in_path);
  if (compare_path.empty()) {
    const ContourSet set =
        gait_singular_union(a, rc.time_samples, grid, rc.jobs);
    const RobustnessMargin margin = robustness_margin(set);
    print_margin(std::cout, a.name, margin);
    if (!prefix.empty()) {
      write_file(prefix + ".csv", contours_to_csv({&set}));
      write_file(prefix + ".margins.json", margin_to_json(set, margin));
      if (svg) write_file(prefix + ".svg", contours_to_svg({&set}));
      std::cout << "contours written to " << prefix << ".csv\n";
    }
    return kExitSuccess;
  }

  const Gait b = load_gait(compare_path);
  const GaitComparison cmp =
      compare_gaits(a, b, grid, rc.time_samples, rc.jobs);
  print_margin(std::cout, a.name, cmp.margin_a);
  print_margin(std::cout, b.name, cmp.margin_b);
  if (cmp.difference) {
    std::cout << "margin difference = " << format_sig12(*cmp.difference)
              << " rad\n";
  } else {
    std::cout << "margin difference = unbounded\n";
  }
  if (!prefix.empty()) {
    write_file(prefix + ".csv",
               contours_to_csv({&cmp.contours_a, &cmp.contours_b}));
    write_file(prefix + ".margins.json", comparison_to_json(cmp));
    if (svg) {
      write_file(prefix + ".svg",
                 contours_to_svg({&cmp.contours_a, &cmp.contours_b}));
    }
    std::cout << "contours written to " << prefix << ".csv\n";
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig rc;
  rc.jobs = env_jobs();

  CLI::App app{"tilt-rotor gait surface analysis"};
  app.set_version_flag("--version",
                       std::string(kToolName) + " " + std::string(kVersion));
  // let --config (and any other global flag) appear after a subcommand
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON file with default option values");

  try {
    apply_config_file(argc, argv, rc);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: bad config file: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed-grid", rc.seed_grid,
                    "Newton seed grid density per axis")
        ->check(CLI::Range(2, 501));
    cmd->add_option("--newton-tol", rc.newton_tol,
                    "Newton residual tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--dedup-radius", rc.dedup_radius,
                    "root deduplication radius (rad)")
        ->check(CLI::PositiveNumber);
  };
  const auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", rc.jobs, "worker thread count")
        ->check(CLI::Range(1, 256));
  };

  // surface
  auto* surface = app.add_subcommand(
      "surface", "sweep the front-pair grid and write the atlas");
  std::string atlas_out, roots_csv, paint_csv, report_out;
  surface->add_option("--grid-n", rc.grid_n, "grid points per axis")
      ->check(CLI::Range(2, 2001));
  surface->add_option("-o,--output", atlas_out, "atlas JSON path")
      ->required();
  surface->add_option("--roots-csv", roots_csv, "per-root CSV path");
  surface->add_option("--paint-csv", paint_csv, "color availability CSV path");
  surface->add_option("--report", report_out, "triangle discrepancy JSON path");
  add_solver_flags(surface);
  add_jobs(surface);

  // roots
  auto* roots = app.add_subcommand("roots", "solve the rear pair at one front pair");
  double a1 = 0.0, a2 = 0.0;
  roots->add_option("--a1", a1, "alpha1 (rad)")
      ->required()
      ->check(CLI::Range(-kHalfPi, kHalfPi));
  roots->add_option("--a2", a2, "alpha2 (rad)")
      ->required()
      ->check(CLI::Range(-kHalfPi, kHalfPi));
  add_solver_flags(roots);

  // gait
  auto* gait = app.add_subcommand("gait", "construct, bias, validate gaits");
  gait->require_subcommand(1);

  auto* rect = gait->add_subcommand("rect", "rectangle gait on a branch");
  std::string a1_range, a2_range, color, gait_name = "gait", gait_out;
  int samples = 128;
  double period = 1.0;
  rect->add_option("--a1", a1_range, "alpha1 range lo:hi (rad)")->required();
  rect->add_option("--a2", a2_range, "alpha2 range lo:hi (rad)")->required();
  rect->add_option("--color", color, "blue | red | identity")->required();
  rect->add_option("--samples", samples, "samples per period")
      ->check(CLI::Range(8, 100000));
  rect->add_option("--period", period, "gait period (s)")
      ->check(CLI::PositiveNumber);
  rect->add_option("--name", gait_name, "gait name");
  rect->add_option("-o,--output", gait_out, "gait JSON path")->required();
  add_solver_flags(rect);

  auto* bias = gait->add_subcommand("bias", "scale the rear angles by eta");
  std::string bias_in, bias_out, bias_name;
  double eta = 0.8;
  bias->add_option("-i,--input", bias_in, "source gait JSON")->required();
  bias->add_option("--eta", eta, "scaling coefficient in (0,1)")
      ->required()
      ->check(CLI::Range(std::nextafter(0.0, 1.0), 1.0));
  bias->add_option("--name", bias_name, "name of the biased gait");
  bias->add_option("-o,--output", bias_out, "output gait JSON")->required();

  auto* validate = gait->add_subcommand("validate", "check a gait file");
  std::string val_in, val_color, val_report;
  validate->add_option("-i,--input", val_in, "gait JSON")->required();
  validate->add_option("--color", val_color, "require blue or red type");
  validate->add_option("--report", val_report, "validation report JSON path");
  add_solver_flags(validate);

  auto* vertices = gait->add_subcommand("vertices", "extract gait vertices");
  std::string vert_in, vert_out;
  vertices->add_option("-i,--input", vert_in, "gait JSON")->required();
  vertices->add_option("-o,--output", vert_out, "vertices CSV path");

  // singular
  auto* singular = app.add_subcommand(
      "singular", "singular attitude contours and robustness margins");
  std::string sing_in, sing_compare, sing_prefix;
  bool sing_svg = false;
  singular->add_option("-i,--input", sing_in, "gait JSON")->required();
  singular->add_option("--compare", sing_compare, "second gait JSON");
  singular->add_option("-o,--output", sing_prefix,
                       "output prefix (writes <prefix>.csv, .margins.json)");
  singular->add_flag("--svg", sing_svg, "also write <prefix>.svg");
  singular->add_option("--grid-res", rc.grid_res,
                       "attitude grid resolution (odd)")
      ->check(CLI::Range(3, 20001));
  singular->add_option("--time-samples", rc.time_samples,
                       "gait samples in the union")
      ->check(CLI::Range(1, 100000));
  add_jobs(singular);

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (surface->parsed()) {
      return run_surface(rc, atlas_out, roots_csv, paint_csv, report_out);
    }
    if (roots->parsed()) {
      return run_roots(rc, a1, a2);
    }
    if (gait->parsed()) {
      if (rect->parsed()) {
        return run_gait_rect(rc, a1_range, a2_range, color, samples, period,
                             gait_name, gait_out);
      }
      if (bias->parsed()) {
        return run_gait_bias(bias_in, eta, bias_name, bias_out);
      }
      if (validate->parsed()) {
        return run_gait_validate(rc, val_in, val_color, val_report);
      }
      if (vertices->parsed()) {
        return run_gait_vertices(vert_in, vert_out);
      }
    }
    if (singular->parsed()) {
      return run_singular(rc, sing_in, sing_compare, sing_prefix, sing_svg);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GaitValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const Violation& v : e.report.violations) {
      std::cerr << "  [" << v.from_index << "->" << v.to_index << "] "
                << v.rule << ": " << v.detail << "\n";
    }
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
