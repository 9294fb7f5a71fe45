// Command-line front end: evaluate single points, run sweeps, reproduce the
// published figure data, locate sudden-death thresholds and validate the
// printed closed forms. All output is CSV with one '#' metadata line.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unruhsim/closedform.hpp"
#include "unruhsim/csv.hpp"
#include "unruhsim/entanglement.hpp"
#include "unruhsim/esd.hpp"
#include "unruhsim/rindler.hpp"
#include "unruhsim/scenarios.hpp"
#include "unruhsim/version.hpp"

namespace {

using namespace unruhsim;

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  void open(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    stream = &file;
  }
};

std::string echo_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

void write_meta(std::ostream& os, const std::string& args, const std::string& extra = {}) {
  os << "# unruhsim " << kVersion << " | " << args;
  if (!extra.empty()) os << " | " << extra;
  os << "\n";
}

std::string record_row(const SweepRecord& rec) {
  return join({to_string(rec.scenario), to_string(rec.coupling), format_real(rec.r),
               format_real(rec.p1), format_real(rec.p2), format_real(rec.p3),
               format_real(rec.concurrence)});
}

constexpr const char* kRecordHeader = "scenario,coupling,r,p1,p2,p3,concurrence";

std::vector<double> parse_r_list(const std::string& list) {
  std::vector<double> rs;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    rs.push_back(std::stod(tok));
  }
  if (rs.empty()) throw CLI::ValidationError("--r", "expected a comma-separated list of reals");
  for (double r : rs) {
    if (!(r >= 0.0 && r <= kRMax + kRSlack)) {
      throw CLI::ValidationError("--r", "values must lie in [0, pi/4]");
    }
  }
  std::sort(rs.begin(), rs.end());
  return rs;
}

void apply_fixes(ScenarioConfig& cfg, const std::vector<std::string>& fixes,
                 std::optional<SweepVar> swept) {
  for (const auto& fix : fixes) {
    const auto eq = fix.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--fix", "expected VAR=VALUE, got '" + fix + "'");
    }
    const std::string var = fix.substr(0, eq);
    const double value = std::stod(fix.substr(eq + 1));
    SweepVar v;
    try {
      v = sweep_var_from_string(var);
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("--fix", e.what());
    }
    if (v == SweepVar::AllEqual) {
      throw CLI::ValidationError("--fix", "cannot fix 'p'; fix p1, p2, p3 individually");
    }
    if (swept && (v == *swept || *swept == SweepVar::AllEqual)) {
      throw CLI::ValidationError("--fix", "variable '" + var + "' conflicts with the sweep");
    }
    if (!(value >= 0.0 && value <= 1.0)) {
      throw CLI::ValidationError("--fix", "'" + var + "' must lie in [0, 1]");
    }
    set_sweep_value(cfg, v, value);
  }
}

// --- point ------------------------------------------------------------------

struct PointArgs {
  std::string scenario, coupling;
  double r = 0, p1 = 0, p2 = 0, p3 = 0;
};

int run_point(const PointArgs& a, const std::string& args) {
  const ScenarioConfig cfg{scenario_from_string(a.scenario), coupling_from_string(a.coupling),
                           a.r, a.p1, a.p2, a.p3};
  const SweepRecord rec{cfg.id, cfg.coupling, cfg.r, cfg.p1, cfg.p2, cfg.p3,
                        concurrence_of(cfg)};
  write_meta(std::cout, args);
  std::cout << kRecordHeader << "\n" << record_row(rec) << "\n";
  return 0;
}

// --- sweep ------------------------------------------------------------------

struct SweepArgs {
  std::string scenario, coupling, r_list, sweep, out = "-";
  std::vector<std::string> fixes;
};

int run_sweep(const SweepArgs& a, const std::string& args) {
  std::stringstream ss(a.sweep);
  std::string var_s, lo_s, hi_s, n_s;
  if (!std::getline(ss, var_s, ':') || !std::getline(ss, lo_s, ':') ||
      !std::getline(ss, hi_s, ':') || !std::getline(ss, n_s)) {
    throw CLI::ValidationError("--sweep", "expected VAR:LO:HI:N");
  }
  const SweepVar var = sweep_var_from_string(var_s);
  const double lo = std::stod(lo_s);
  const double hi = std::stod(hi_s);
  const int n = std::stoi(n_s);
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) {
    throw CLI::ValidationError("--sweep", "need 0 <= LO <= HI <= 1");
  }
  if (n < 2) throw CLI::ValidationError("--sweep", "N must be >= 2");

  ScenarioConfig base{scenario_from_string(a.scenario), coupling_from_string(a.coupling),
                      0.0, 0.0, 0.0, 0.0};
  apply_fixes(base, a.fixes, var);

  Output out;
  out.open(a.out);
  write_meta(*out.stream, args);
  *out.stream << kRecordHeader << "\n";
  for (double r : parse_r_list(a.r_list)) {
    for (int k = 0; k < n; ++k) {
      ScenarioConfig cfg = base;
      cfg.r = r;
      set_sweep_value(cfg, var, lo + (hi - lo) * k / (n - 1));
      const SweepRecord rec{cfg.id, cfg.coupling, cfg.r, cfg.p1, cfg.p2, cfg.p3,
                            concurrence_of(cfg)};
      *out.stream << record_row(rec) << "\n";
    }
  }
  return 0;
}

// --- figure -----------------------------------------------------------------

struct FigureArgs {
  std::string id, out = "-";
  int samples = 201;
};

int run_figure(const FigureArgs& a, const std::string& args) {
  const FigurePreset& preset = figure_preset(a.id);
  std::string extra = "figure " + preset.figure_id + ": " +
                      std::string(to_string(preset.scenario)) + " " +
                      to_string(preset.coupling) + " fixed p1=" + format_real(preset.p1) +
                      " p2=" + format_real(preset.p2) + " p3=" + format_real(preset.p3) +
                      " sweep=" + to_string(preset.sweep) + " r-grid=";
  for (std::size_t i = 0; i < preset.r_values.size(); ++i) {
    if (i) extra += ';';
    extra += format_real(preset.r_values[i]);
  }

  Output out;
  out.open(a.out);
  write_meta(*out.stream, args, extra);
  *out.stream << kRecordHeader << "\n";
  for (const SweepRecord& rec : figure_data(preset, a.samples)) {
    *out.stream << record_row(rec) << "\n";
  }
  return 0;
}

// --- esd --------------------------------------------------------------------

struct EsdArgs {
  std::string scenario, coupling, sweep_var, r_list, out = "-";
  std::vector<std::string> fixes;
  double tol = 1e-6;
};

int run_esd(const EsdArgs& a, const std::string& args) {
  const SweepVar var = sweep_var_from_string(a.sweep_var);
  ScenarioConfig base{scenario_from_string(a.scenario), coupling_from_string(a.coupling),
                      0.0, 0.0, 0.0, 0.0};
  apply_fixes(base, a.fixes, var);

  Output out;
  out.open(a.out);
  write_meta(*out.stream, args, std::string("zero-threshold=1e-12 grid=512"));
  *out.stream << "scenario,coupling,r,p1,p2,p3,sweep_var,status,threshold,bracket_lo,bracket_hi\n";
  for (double r : parse_r_list(a.r_list)) {
    ScenarioConfig cfg = base;
    cfg.r = r;
    const EsdResult res = find_esd(cfg, var, 512, a.tol);
    *out.stream << join({to_string(cfg.id), to_string(cfg.coupling), format_real(cfg.r),
                         format_real(cfg.p1), format_real(cfg.p2), format_real(cfg.p3),
                         to_string(var), to_string(res.status),
                         res.threshold ? format_real(*res.threshold) : "",
                         format_real(res.bracket_lo), format_real(res.bracket_hi)})
                << "\n";
  }
  return 0;
}

// --- validate-closedform ------------------------------------------------------

struct ValidateArgs {
  int grid = 1000;
  unsigned long long seed = 20120601;
  std::string out = "-";
};

int run_validate(const ValidateArgs& a, const std::string& args) {
  const auto records = validate_closedform(a.grid, a.seed);

  std::string corrections = "corrections: ";
  const auto& list = closedform_corrections();
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) corrections += "; ";
    corrections += list[i];
  }

  Output out;
  out.open(a.out);
  write_meta(*out.stream, args, corrections);
  *out.stream << "family,r,p1,p2,p3,pipeline_values,printed_values,max_abs_deviation,status\n";
  bool all_ok = true;
  for (const auto& rec : records) {
    std::vector<std::string> pipeline, printed;
    for (double v : rec.pipeline_values) pipeline.push_back(format_real(v));
    for (double v : rec.printed_values) printed.push_back(format_real(v));
    *out.stream << join({rec.family, format_real(rec.r), format_real(rec.p1),
                         format_real(rec.p2), format_real(rec.p3), join(pipeline, ';'),
                         join(printed, ';'), format_real(rec.max_abs_deviation),
                         rec.validated ? "validated" : "unvalidated"})
                << "\n";
    all_ok = all_ok && rec.validated;
  }
  return all_ok ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concurrence of a Dirac-field Bell pair seen from a uniformly "
               "accelerated frame, under amplitude damping, phase damping and "
               "depolarizing environments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("unruhsim ") + kVersion);

  PointArgs pa;
  auto* point = app.add_subcommand("point", "evaluate one parameter point");
  point->add_option("--scenario", pa.scenario, "S1 | S2 | S3")->required();
  point->add_option("--coupling", pa.coupling, "multilocal | global")->required();
  point->add_option("--r", pa.r, "acceleration parameter in [0, pi/4]")->required();
  point->add_option("--p1", pa.p1, "amplitude damping parameter");
  point->add_option("--p2", pa.p2, "phase damping parameter");
  point->add_option("--p3", pa.p3, "depolarizing parameter");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "sweep one decoherence parameter");
  sweep->add_option("--scenario", sa.scenario, "S1 | S2 | S3")->required();
  sweep->add_option("--coupling", sa.coupling, "multilocal | global")->required();
  sweep->add_option("--r", sa.r_list, "comma-separated r values")->required();
  sweep->add_option("--fix", sa.fixes, "fix a parameter, VAR=VALUE (repeatable)");
  sweep->add_option("--sweep", sa.sweep, "VAR:LO:HI:N with VAR one of p1, p2, p3, p")->required();
  sweep->add_option("--out", sa.out, "output path, or - for stdout");

  FigureArgs fa;
  auto* figure = app.add_subcommand("figure", "reproduce the data behind one published figure");
  figure->add_option("--id", fa.id, "1a | 1b | 2a | 2b | 3 | 4 | 5a | 5b | 6")->required();
  figure->add_option("--samples", fa.samples, "sweep samples per r value")
      ->check(CLI::Range(2, 1000000));
  figure->add_option("--out", fa.out, "output path, or - for stdout");

  EsdArgs ea;
  auto* esd = app.add_subcommand("esd", "locate entanglement sudden-death thresholds");
  esd->add_option("--scenario", ea.scenario, "S1 | S2 | S3")->required();
  esd->add_option("--coupling", ea.coupling, "multilocal | global")->required();
  esd->add_option("--fix", ea.fixes, "fix a parameter, VAR=VALUE (repeatable)");
  esd->add_option("--sweep-var", ea.sweep_var, "p1 | p2 | p3")->required();
  esd->add_option("--r", ea.r_list, "comma-separated r values")->required();
  esd->add_option("--tol", ea.tol, "bisection tolerance, in (0, 1e-6]");

  ValidateArgs va;
  auto* validate = app.add_subcommand(
      "validate-closedform", "compare printed closed forms against the Kraus pipeline");
  validate->add_option("--grid", va.grid, "number of random parameter points")
      ->check(CLI::Range(1, 10000000));
  validate->add_option("--seed", va.seed, "RNG seed");
  validate->add_option("--out", va.out, "output path, or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string args = echo_args(argc, argv);
  try {
    if (point->parsed()) return run_point(pa, args);
    if (sweep->parsed()) return run_sweep(sa, args);
    if (figure->parsed()) return run_figure(fa, args);
    if (esd->parsed()) return run_esd(ea, args);
    if (validate->parsed()) return run_validate(va, args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
