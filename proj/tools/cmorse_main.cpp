// cmorse — closed-form solver and parameter-space explorer for the
// complex-mass, complex-Morse bound-state family in the extended phase plane.
//
// Commands: solve | ros | sweep | classify | verify | critical
// Exit codes: 0 success, 2 config error, 3 degenerate/inadmissible, 4 I/O.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmorse/atlas.hpp"
#include "cmorse/closed_form.hpp"
#include "cmorse/io.hpp"
#include "cmorse/oracle.hpp"
#include "cmorse/ros.hpp"
#include "cmorse/units.hpp"

using json = nlohmann::ordered_json;
using namespace cmorse;

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

struct RunConfig {
  std::string command;
  std::string units = "dimensionless";
  double m_r = 1.0, m_i = 1.0, a_r = 1.0, a_i = 1.0, v_or = 2.0;
  std::string axis = "m_i";
  double min = 0.0, max = 0.0;
  int count = 0;  // sweep points / verify draws; per-command default applies
  double eta0 = 0.05;
  double eps = 1e-9;
  double tol = 1e-9;
  std::uint64_t seed = kDefaultSeed;
  bool ros_mode = false;
  std::string format;  // per-command default applies
  std::string out;
};

json config_to_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["units"] = c.units;
  j["m_r"] = c.m_r;
  j["m_i"] = c.m_i;
  j["a_r"] = c.a_r;
  j["a_i"] = c.a_i;
  j["v_or"] = c.v_or;
  j["axis"] = c.axis;
  j["min"] = c.min;
  j["max"] = c.max;
  j["count"] = c.count;
  j["eta0"] = c.eta0;
  j["eps"] = c.eps;
  j["tol"] = c.tol;
  j["seed"] = c.seed;
  j["ros"] = c.ros_mode;
  j["format"] = c.format;
  j["out"] = c.out;
  return j;
}

void config_from_json(const json& j, RunConfig& c) {
  auto get = [&j](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  get("command", c.command);
  get("units", c.units);
  get("m_r", c.m_r);
  get("m_i", c.m_i);
  get("a_r", c.a_r);
  get("a_i", c.a_i);
  get("v_or", c.v_or);
  get("axis", c.axis);
  get("min", c.min);
  get("max", c.max);
  get("count", c.count);
  get("eta0", c.eta0);
  get("eps", c.eps);
  get("tol", c.tol);
  get("seed", c.seed);
  get("ros", c.ros_mode);
  get("format", c.format);
  get("out", c.out);
}

json params_json(const SystemParameters& p, const std::string& units) {
  json j;
  j["m_r"] = p.m_r;
  j["m_i"] = p.m_i;
  j["a_r"] = p.a_r;
  j["a_i"] = p.a_i;
  j["v_or"] = p.V_or;
  j["hbar"] = p.hbar;
  j["units"] = units;
  return j;
}

json opt_json(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

json row_json(const atlas::SweepRow& r) {
  json j;
  j["m_i"] = r.m_i;
  j["a_i"] = r.a_i;
  j["beta3"] = opt_json(r.beta3);
  j["alpha1"] = opt_json(r.alpha1);
  j["beta1"] = opt_json(r.beta1);
  j["ppd"] = opt_json(r.ppd);
  j["E_r"] = opt_json(r.E_r);
  j["E_i"] = opt_json(r.E_i);
  j["region"] = atlas::to_string(r.region);
  j["matter"] = atlas::to_string(r.matter);
  return j;
}

int emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.out.empty()) {
    std::cout << content;
    return 0;
  }
  try {
    io::atomic_write(cfg.out, content);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 4;
  }
  return 0;
}

SystemParameters build_params(const RunConfig& cfg) {
  const UnitMode mode = unit_mode_from_string(cfg.units);
  return make_parameters(mode, cfg.m_r, cfg.m_i, cfg.a_r, cfg.a_i, cfg.v_or);
}

atlas::Thresholds thresholds(const RunConfig& cfg) {
  atlas::Thresholds thr;
  thr.eta0 = cfg.eta0;
  thr.eps = cfg.eps;
  return thr;
}

int cmd_solve(const RunConfig& cfg) {
  const SystemParameters p = build_params(cfg);
  json j;
  j["params"] = params_json(p, cfg.units);
  double b3 = 0.0, voi = 0.0;
  try {
    b3 = beta3_forward(p);
    voi = voi_constraint(p);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 3;
  }
  const SolutionCoefficients c = coefficients(p, b3);
  const EnergySpectrum e = spectrum(p, c);
  const NormalizationStatus norm = normalization(c);
  j["beta3"] = b3;
  j["v_oi"] = voi;
  j["alpha1"] = c.alpha1;
  j["beta1"] = c.beta1;
  j["N"] = norm.normalizable ? json(norm.constant_N) : json(nullptr);
  j["E_r"] = e.E_r;
  j["E_i"] = e.E_i;
  j["region"] = atlas::to_string(atlas::classify_region(p));
  j["matter"] =
      atlas::to_string(atlas::classify_matter(p, e, norm, thresholds(cfg)));
  return emit(cfg, j.dump(2) + "\n");
}

int cmd_ros(const RunConfig& cfg) {
  const SystemParameters p = build_params(cfg);
  json j;
  j["params"] = params_json(p, cfg.units);
  RosSolution sol;
  try {
    const RosCoefficients rc = ros_coefficients(p);
    sol = ros_select(p, ros_roots(rc));
    j["omega"] = rc.Omega;
    j["A"] = rc.A;
    j["B"] = rc.B;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 3;
  }
  j["roots"] = json::array({sol.roots.plus, sol.roots.minus});
  j["degenerate"] = sol.roots.degenerate;
  j["selected"] = sol.selected ? json(*sol.selected) : json(nullptr);
  j["rejection"] = sol.rejection ? json(to_string(*sol.rejection)) : json(nullptr);
  j["implied_v_or"] = sol.implied_V_or ? json(*sol.implied_V_or) : json(nullptr);
  j["configured_v_or"] = p.V_or;
  j["v_or_mismatch_ratio"] =
      sol.implied_V_or ? json(*sol.implied_V_or / p.V_or) : json(nullptr);
  if (sol.selected) {
    const SolutionCoefficients c = coefficients(p, *sol.selected);
    const EnergySpectrum e = spectrum(p, c);
    const NormalizationStatus norm = normalization(c);
    j["alpha1"] = c.alpha1;
    j["beta1"] = c.beta1;
    j["N"] = norm.normalizable ? json(norm.constant_N) : json(nullptr);
    j["E_r"] = e.E_r;
    j["E_i"] = e.E_i;
    const atlas::SweepRow row = atlas::evaluate_ros(p, thresholds(cfg));
    j["region"] = atlas::to_string(row.region);
    j["matter"] = atlas::to_string(row.matter);
  }
  const int rc = emit(cfg, j.dump(2) + "\n");
  if (rc != 0) return rc;
  return sol.selected ? 0 : 3;
}

int cmd_classify(const RunConfig& cfg) {
  const SystemParameters p = build_params(cfg);
  const atlas::SweepRow row = cfg.ros_mode
                                  ? atlas::evaluate_ros(p, thresholds(cfg))
                                  : atlas::evaluate_general(p, thresholds(cfg));
  json j;
  j["params"] = params_json(p, cfg.units);
  j["mode"] = cfg.ros_mode ? "ros" : "general";
  json r = row_json(row);
  for (auto& [k, v] : r.items()) j[k] = v;
  return emit(cfg, j.dump(2) + "\n");
}

int cmd_sweep(const RunConfig& cfg) {
  if (cfg.count < 2) {
    std::cerr << "error: sweep requires --count >= 2\n";
    return 2;
  }
  if (!(cfg.min < cfg.max)) {
    std::cerr << "error: sweep requires --min < --max\n";
    return 2;
  }
  const SystemParameters base = build_params(cfg);
  const atlas::SweepAxis axis = atlas::sweep_axis_from_string(cfg.axis);
  const atlas::SweepMode mode =
      cfg.ros_mode ? atlas::SweepMode::Ros : atlas::SweepMode::General;
  const auto rows =
      atlas::sweep(base, axis, cfg.min, cfg.max, cfg.count, mode, thresholds(cfg));
  if (cfg.format == "json") {
    json j;
    j["axis"] = cfg.axis;
    j["mode"] = cfg.ros_mode ? "ros" : "general";
    j["rows"] = json::array();
    for (const auto& r : rows) j["rows"].push_back(row_json(r));
    return emit(cfg, j.dump(2) + "\n");
  }
  return emit(cfg, io::sweep_csv(rows));
}

int cmd_verify(const RunConfig& cfg) {
  const int draws = cfg.count > 0 ? cfg.count : 200;
  const oracle::BatteryResult b = oracle::run_battery(cfg.seed, draws);
  json j;
  j["seed"] = b.seed;
  j["draws"] = b.draws;
  j["max_coefficient_residual"] = b.max_coefficient_residual;
  j["max_pde_residual_scaled"] = b.max_pde_scaled;
  j["max_pde_residual_scaled_half_h"] = b.max_pde_scaled_half;
  j["halving_ratio"] = b.halving_ratio;
  j["max_cr_residual"] = b.max_cr;
  j["max_quadrature_error"] = b.max_quadrature_error;
  j["negative_controls"]["pde_shift_error"] = b.control_pde_shift_error;
  j["negative_controls"]["cr_corrupted_residual"] = b.control_cr_corrupted_min;
  j["pass"] = b.pass;
  const int rc = emit(cfg, j.dump(2) + "\n");
  if (rc != 0) return rc;
  return b.pass ? 0 : 3;
}

int cmd_critical(const RunConfig& cfg) {
  const SystemParameters base = build_params(cfg);
  const atlas::SweepAxis axis = atlas::sweep_axis_from_string(cfg.axis);
  double lo = cfg.min, hi = cfg.max;
  if (!(lo < hi)) {
    // Default brackets around the physically interesting range.
    if (axis == atlas::SweepAxis::a_i) {
      lo = 0.0;
      hi = 10.0 * base.a_r;
    } else {
      lo = -10.0 * base.m_r;
      hi = 10.0 * base.m_r;
    }
  }
  json j;
  try {
    const atlas::CriticalValue cv =
        atlas::find_critical(base, axis, lo, hi, cfg.tol);
    j["axis"] = atlas::to_string(cv.axis);
    j["value"] = cv.value;
    j["kind"] = "denominator_root";
    j["bracket"] = json::array({cv.bracket_lo, cv.bracket_hi});
    j["d_at_value"] = cv.d_at_value;
    j["analytic_roots"] = atlas::critical_analytic(base, axis);
  } catch (const NoSignChange& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 3;
  }
  return emit(cfg, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cmorse: complex-mass Morse closed forms, spectral-reality roots and "
      "parameter-space atlases"};
  app.get_formatter()->column_width(30);

  RunConfig cfg;
  std::string config_path;
  std::string command;

  app.add_option("command", command,
                 "one of: solve ros sweep classify verify critical");
  app.add_option("--config", config_path, "JSON config file (flags override)");
  auto* o_units = app.add_option("--units", cfg.units,
                                 "dimensionless | spectroscopic (cm^-1, A, amu)");
  auto* o_mr = app.add_option("--m-r", cfg.m_r, "real mass (> 0)");
  auto* o_mi = app.add_option("--m-i", cfg.m_i, "imaginary mass");
  auto* o_ar = app.add_option("--a-r", cfg.a_r, "real Morse parameter (> 0)");
  auto* o_ai = app.add_option("--a-i", cfg.a_i, "imaginary Morse parameter");
  auto* o_vor = app.add_option("--v-or", cfg.v_or, "real well depth (> 0)");
  auto* o_axis = app.add_option("--axis", cfg.axis, "sweep/critical axis: m_i | a_i");
  auto* o_min = app.add_option("--min", cfg.min, "axis lower bound / bracket start");
  auto* o_max = app.add_option("--max", cfg.max, "axis upper bound / bracket end");
  auto* o_count = app.add_option("--count", cfg.count,
                                 "sweep points (>= 2) or verify draws (default 200)");
  auto* o_eta0 = app.add_option("--eta0", cfg.eta0, "quasi-stable bound on |E_i|/|E_r|");
  auto* o_eps = app.add_option("--eps", cfg.eps, "zero tolerance for E_i");
  auto* o_tol = app.add_option("--tol", cfg.tol, "bisection bracket width");
  auto* o_seed = app.add_option("--seed", cfg.seed, "verify RNG seed (default 1729)");
  auto* o_ros = app.add_flag("--ros", cfg.ros_mode,
                             "sweep/classify against the E_i = 0 root family");
  auto* o_format = app.add_option("--format", cfg.format, "csv | json");
  auto* o_out = app.add_option("--out", cfg.out, "output path (atomic write); default stdout");
  bool echo_config = false;
  app.add_flag("--echo-config", echo_config,
               "print the effective config as JSON and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read config: " << config_path << "\n";
      return 2;
    }
    json j;
    try {
      in >> j;
    } catch (const std::exception& ex) {
      std::cerr << "error: bad config JSON: " << ex.what() << "\n";
      return 2;
    }
    RunConfig from_file = cfg;
    try {
      config_from_json(j, from_file);
    } catch (const std::exception& ex) {
      std::cerr << "error: bad config value: " << ex.what() << "\n";
      return 2;
    }
    // Flags win over file values.
    if (o_units->count() == 0) cfg.units = from_file.units;
    if (o_mr->count() == 0) cfg.m_r = from_file.m_r;
    if (o_mi->count() == 0) cfg.m_i = from_file.m_i;
    if (o_ar->count() == 0) cfg.a_r = from_file.a_r;
    if (o_ai->count() == 0) cfg.a_i = from_file.a_i;
    if (o_vor->count() == 0) cfg.v_or = from_file.v_or;
    if (o_axis->count() == 0) cfg.axis = from_file.axis;
    if (o_min->count() == 0) cfg.min = from_file.min;
    if (o_max->count() == 0) cfg.max = from_file.max;
    if (o_count->count() == 0) cfg.count = from_file.count;
    if (o_eta0->count() == 0) cfg.eta0 = from_file.eta0;
    if (o_eps->count() == 0) cfg.eps = from_file.eps;
    if (o_tol->count() == 0) cfg.tol = from_file.tol;
    if (o_seed->count() == 0) cfg.seed = from_file.seed;
    if (o_ros->count() == 0) cfg.ros_mode = from_file.ros_mode;
    if (o_format->count() == 0) cfg.format = from_file.format;
    if (o_out->count() == 0) cfg.out = from_file.out;
    if (command.empty()) command = from_file.command;
  }

  cfg.command = command;
  if (echo_config) {
    return emit(cfg, config_to_json(cfg).dump(2) + "\n");
  }

  static const std::set<std::string> commands{"solve",    "ros",    "sweep",
                                              "classify", "verify", "critical"};
  if (!commands.count(command)) {
    std::cerr << "error: unknown or missing command"
              << (command.empty() ? "" : ": " + command)
              << " (expected solve|ros|sweep|classify|verify|critical)\n";
    return 2;
  }
  if (cfg.format.empty()) cfg.format = command == "sweep" ? "csv" : "json";
  if (cfg.format != "csv" && cfg.format != "json") {
    std::cerr << "error: --format must be csv or json\n";
    return 2;
  }

  try {
    for (double v : {cfg.m_r, cfg.m_i, cfg.a_r, cfg.a_i, cfg.v_or, cfg.eta0,
                     cfg.eps, cfg.tol}) {
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite numeric field");
    }
    unit_mode_from_string(cfg.units);
    atlas::sweep_axis_from_string(cfg.axis);
    build_params(cfg);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }

  if (command == "solve") return cmd_solve(cfg);
  if (command == "ros") return cmd_ros(cfg);
  if (command == "sweep") return cmd_sweep(cfg);
  if (command == "classify") return cmd_classify(cfg);
  if (command == "verify") return cmd_verify(cfg);
  return cmd_critical(cfg);
}
