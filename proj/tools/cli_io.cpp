#include "cli_io.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "csv.hpp"
#include "fr1d/driver.hpp"

namespace fr1d::cli {

namespace {

const std::map<std::string, Scheme> kSchemes{
    {"ader", Scheme::Ader}, {"lw-d1", Scheme::LwD1}, {"lw-d2", Scheme::LwD2}};
const std::map<std::string, NodeKind> kPoints{{"gl", NodeKind::GaussLegendre},
                                              {"gll", NodeKind::GaussLobattoLegendre}};
const std::map<std::string, CorrectionKind> kCorrections{{"radau", CorrectionKind::Radau},
                                                         {"g2", CorrectionKind::G2}};
const std::map<std::string, BoundaryKind> kBoundaries{{"periodic", BoundaryKind::Periodic},
                                                      {"dirichlet", BoundaryKind::DirichletInflow}};
const std::map<std::string, FluxKind> kFluxes{{"linear", FluxKind::Linear},
                                              {"burgers", FluxKind::Burgers}};
const std::map<std::string, PredictorMethod> kPredictors{{"auto", PredictorMethod::Auto},
                                                         {"direct", PredictorMethod::Direct},
                                                         {"picard", PredictorMethod::Picard}};
const std::map<std::string, FaceFluxTiming> kFaceFlux{
    {"per-node", FaceFluxTiming::PerTemporalNode}, {"average-first", FaceFluxTiming::AverageFirst}};

constexpr int kDefaultDofs = 240;

// Raw option values shared by every subcommand.
struct Options {
  int degree = 1;
  std::optional<int> elements;
  std::optional<int> dofs;
  NodeKind points = NodeKind::GaussLegendre;
  std::optional<CorrectionKind> correction;
  bool force_pairing = false;
  std::vector<Scheme> schemes;
  std::string ic = "wavepacket";
  BoundaryKind bc = BoundaryKind::Periodic;
  double speed = 5.0;
  FluxKind flux = FluxKind::Linear;
  double cfl = 0.9;
  double t_final = 0.4;
  double x_min = -1.0;
  double x_max = 1.0;
  std::optional<int> record_interval;
  PredictorMethod predictor = PredictorMethod::Auto;
  int picard_iterations = 0;
  FaceFluxTiming face_flux = FaceFluxTiming::PerTemporalNode;
  std::string out;
};

void add_common(CLI::App* cmd, Options& o, bool many_schemes) {
  cmd->add_option("--degree", o.degree, "Polynomial degree N")->capture_default_str();
  auto* elements = cmd->add_option("--elements", o.elements, "Number of elements");
  cmd->add_option("--dofs", o.dofs, "Degrees of freedom, elements = dofs / (N + 1) [240]")
      ->excludes(elements);
  cmd->add_option("--points", o.points, "Solution points gl|gll")
      ->transform(CLI::CheckedTransformer(kPoints, CLI::ignore_case))
      ->default_str("gl");
  cmd->add_option("--correction", o.correction,
                  "Correction function radau|g2 [radau for gl, g2 for gll]")
      ->transform(CLI::CheckedTransformer(kCorrections, CLI::ignore_case));
  cmd->add_flag("--force-pairing", o.force_pairing,
                "Allow a correction function not paired with the points");
  auto* scheme = cmd->add_option("--scheme", o.schemes, "Scheme ader|lw-d1|lw-d2")
                     ->transform(CLI::CheckedTransformer(kSchemes, CLI::ignore_case));
  if (many_schemes) {
    scheme->expected(1, -1)->take_all();
  } else {
    scheme->expected(1)->default_str("ader");
  }
  cmd->add_option("--ic", o.ic, "Initial condition wavepacket|sine|gauss|const:<c>")
      ->capture_default_str();
  cmd->add_option("--bc", o.bc, "Boundary condition periodic|dirichlet")
      ->transform(CLI::CheckedTransformer(kBoundaries, CLI::ignore_case))
      ->default_str("periodic");
  cmd->add_option("--speed", o.speed, "Advection speed a")->capture_default_str();
  cmd->add_option("--flux", o.flux, "Flux linear|burgers")
      ->transform(CLI::CheckedTransformer(kFluxes, CLI::ignore_case))
      ->default_str("linear");
  cmd->add_option("--cfl", o.cfl, "CFL safety factor")->capture_default_str();
  cmd->add_option("--tfinal", o.t_final, "Final time")->capture_default_str();
  cmd->add_option("--xmin", o.x_min, "Left end of the domain")->capture_default_str();
  cmd->add_option("--xmax", o.x_max, "Right end of the domain")->capture_default_str();
  cmd->add_option("--record-interval", o.record_interval, "Steps between error samples");
  cmd->add_option("--predictor", o.predictor, "ADER predictor solver auto|direct|picard")
      ->transform(CLI::CheckedTransformer(kPredictors, CLI::ignore_case))
      ->default_str("auto");
  cmd->add_option("--picard-iterations", o.picard_iterations,
                  "Picard iterations, 0 for N + 1")
      ->capture_default_str();
  cmd->add_option("--face-flux", o.face_flux,
                  "ADER face flux timing per-node|average-first")
      ->transform(CLI::CheckedTransformer(kFaceFlux, CLI::ignore_case))
      ->default_str("per-node");
}

RunConfig make_config(const Options& o, int default_record_interval) {
  RunConfig c;
  c.degree = o.degree;
  if (o.elements) {
    c.n_elem = *o.elements;
  } else {
    const int dofs = o.dofs.value_or(kDefaultDofs);
    if (o.degree < 0 || dofs < 1 || dofs % (o.degree + 1) != 0) {
      throw ConfigError("--dofs " + std::to_string(dofs) + " is not a positive multiple of " +
                        "N + 1 = " + std::to_string(o.degree + 1));
    }
    c.n_elem = dofs / (o.degree + 1);
  }
  c.points = o.points;
  c.correction = o.correction.value_or(default_correction(o.points));
  c.force_pairing = o.force_pairing;
  c.scheme = o.schemes.empty() ? Scheme::Ader : o.schemes.front();
  c.ic = o.ic;
  c.flux = o.flux;
  c.speed = o.speed;
  c.bc = o.bc;
  c.x_min = o.x_min;
  c.x_max = o.x_max;
  c.cfl_safety = o.cfl;
  c.t_final = o.t_final;
  c.record_interval = o.record_interval.value_or(default_record_interval);
  c.ader.predictor = o.predictor;
  c.ader.picard_iterations = o.picard_iterations;
  c.ader.face_flux = o.face_flux;
  validate(c);
  return c;
}

std::string to_csv(std::span<const ErrorSample> s) {
  std::ostringstream os;
  write_error_csv(os, s);
  return os.str();
}

std::string to_csv(std::span<const DiffSample> s) {
  std::ostringstream os;
  write_diff_csv(os, s);
  return os.str();
}

// <dir>/<stem>_<scheme>_errors.csv next to the diff file.
std::string errors_path(const std::string& diff_path, Scheme scheme) {
  const std::filesystem::path p(diff_path);
  const std::string name = p.stem().string() + "_" + to_string(scheme) + "_errors.csv";
  return (p.parent_path() / name).string();
}

int cmd_run(const Options& o, std::ostream& out) {
  const RunConfig c = make_config(o, 10);
  const std::string path = o.out.empty() ? "errors.csv" : o.out;
  try {
    const ErrorSeries series = run_simulation(c);
    write_text_file(path, to_csv(series));
    out << to_string(c.scheme) << ": t = " << format_double(series.back().time)
        << "  l2 = " << format_double(series.back().l2_error) << "  -> " << path << '\n';
    return kExitOk;
  } catch (const RunAborted& e) {
    write_text_file(path, to_csv(e.partial_errors()));
    throw;
  }
}

int cmd_compare(const Options& o, std::ostream& out) {
  if (o.schemes.size() != 2) throw ConfigError("compare needs exactly two --scheme values");
  const RunConfig a = make_config(o, 1);
  RunConfig b = a;
  b.scheme = o.schemes[1];
  validate(b);
  const std::string path = o.out.empty() ? "diff.csv" : o.out;
  try {
    const Comparison cmp = compare_schemes(a, b);
    write_text_file(path, to_csv(cmp.diff));
    write_text_file(errors_path(path, a.scheme), to_csv(cmp.errors_a));
    write_text_file(errors_path(path, b.scheme), to_csv(cmp.errors_b));
    out << to_string(a.scheme) << " vs " << to_string(b.scheme)
        << ": max linf_diff = " << format_double(cmp.max_diff()) << "  -> " << path << '\n';
    return kExitOk;
  } catch (const RunAborted& e) {
    write_text_file(path, to_csv(e.partial_diff()));
    write_text_file(errors_path(path, a.scheme), to_csv(e.partial_errors()));
    throw;
  }
}

int cmd_eoc(const Options& o, const std::vector<int>& levels, std::ostream& out) {
  Options base = o;
  base.elements = levels.empty() ? 1 : levels.front();  // dofs are irrelevant here
  base.dofs.reset();
  const RunConfig c = make_config(base, 10);
  const std::vector<EocRow> rows = eoc_study(c, levels);
  std::ostringstream csv;
  write_eoc_csv(csv, rows);
  write_text_file(o.out.empty() ? "eoc.csv" : o.out, csv.str());
  out << "n_elem  l2_error                 order\n";
  for (const EocRow& r : rows) {
    char line[96];
    std::snprintf(line, sizeof line, "%6d  %.16e  %s\n", r.n_elem, r.l2_error,
                  std::isnan(r.order) ? "-" : format_double(r.order).c_str());
    out << line;
  }
  return kExitOk;
}

int cmd_scan(const Options& o, double cfl_min, double cfl_max, double cfl_step,
             double growth_limit, std::ostream& out) {
  const RunConfig c = make_config(o, 10);
  if (!(cfl_step > 0.0) || !(cfl_min > 0.0) || !(cfl_max >= cfl_min)) {
    throw ConfigError("scan needs 0 < --cfl-min <= --cfl-max and --cfl-step > 0");
  }
  if (!(growth_limit > 1.0)) throw ConfigError("--growth-limit must exceed 1");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double v = cfl_min + i * cfl_step;
    if (v > cfl_max + 1e-12 * cfl_step) break;
    grid.push_back(v);
  }
  std::vector<Scheme> schemes = o.schemes;
  if (schemes.empty()) schemes = {Scheme::Ader, Scheme::LwD2, Scheme::LwD1};
  for (const Scheme s : schemes) {
    RunConfig probe = c;
    probe.scheme = s;
    validate(probe);
  }
  const auto thresholds = stability_scan(c, grid, schemes, {growth_limit});
  std::ostringstream csv;
  csv << "scheme,cfl_safety,courant\n";
  const int n = c.degree;
  for (const StabilityThreshold& t : thresholds) {
    // Courant number a dt / dx at the threshold.
    const double courant = t.cfl_safety / ((n + 1) * (2 * n + 1));
    csv << to_string(t.scheme) << ',' << format_double(t.cfl_safety) << ','
        << format_double(courant) << '\n';
  }
  out << csv.str();
  if (!o.out.empty()) write_text_file(o.out, csv.str());
  return kExitOk;
}

}  // namespace

int parse_and_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"One-dimensional flux reconstruction solver (ADER and Lax-Wendroff)", "fr1d"};
  app.require_subcommand(1);

  Options run_opts, cmp_opts, eoc_opts, scan_opts;
  auto* run = app.add_subcommand("run", "Run one scheme and write the error series CSV");
  add_common(run, run_opts, false);
  run->add_option("--out", run_opts.out, "Output CSV [errors.csv]");

  auto* compare = app.add_subcommand(
      "compare", "Run two schemes in lockstep and write the difference and error CSVs");
  add_common(compare, cmp_opts, true);
  compare->add_option("--out", cmp_opts.out, "Difference CSV [diff.csv]");

  std::vector<int> levels{10, 20, 40, 80};
  auto* eoc = app.add_subcommand("eoc", "Convergence study over element counts");
  add_common(eoc, eoc_opts, false);
  eoc->add_option("--levels", levels, "Element counts, strictly increasing")
      ->delimiter(',')
      ->capture_default_str();
  eoc->add_option("--out", eoc_opts.out, "Output CSV [eoc.csv]");

  double cfl_min = 0.05, cfl_max = 4.0, cfl_step = 0.05, growth_limit = 10.0;
  auto* scan = app.add_subcommand("scan", "Largest stable CFL factor for each scheme");
  add_common(scan, scan_opts, true);
  scan->add_option("--cfl-min", cfl_min, "Smallest CFL factor tried")->capture_default_str();
  scan->add_option("--cfl-max", cfl_max, "Largest CFL factor tried")->capture_default_str();
  scan->add_option("--cfl-step", cfl_step, "CFL grid spacing")->capture_default_str();
  scan->add_option("--growth-limit", growth_limit,
                   "Unstable once max |u| exceeds this multiple of its initial value")
      ->capture_default_str();
  scan->add_option("--out", scan_opts.out, "Optional CSV of the thresholds");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (run->parsed()) return cmd_run(run_opts, out);
    if (compare->parsed()) return cmd_compare(cmp_opts, out);
    if (eoc->parsed()) return cmd_eoc(eoc_opts, levels, out);
    return cmd_scan(scan_opts, cfl_min, cfl_max, cfl_step, growth_limit, out);
  } catch (const BlowUpError& e) {
    err << "blow-up: " << e.what() << " (last stable t = " << e.last_stable_time() << ")\n";
    return kExitBlowUp;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitBlowUp;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace fr1d::cli
