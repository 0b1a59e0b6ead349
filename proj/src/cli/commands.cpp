#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>
#include <json.hpp>

#include "casimir/compare.hpp"
#include "casimir/errors.hpp"
#include "casimir/friction.hpp"
#include "casimir/material.hpp"
#include "casimir/numerics.hpp"
#include "casimir/trajectory.hpp"
#include "cli/run_config.hpp"

namespace casimir::cli {

namespace {

using nlohmann::json;
using numerics::constants::hbar;
using numerics::constants::k_B;
using numerics::constants::pi;

constexpr const char* kVersion = "0.1.0";

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (x == 0.0) x = 0.0;  // drops the sign of -0
  return fmt::format("{}", x);
}

std::string csv_flags(const std::vector<std::string>& flags) {
  std::string s;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i) s += ';';
    s += flags[i];
  }
  return s;
}

void check_format(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "csv") throw InvalidConfig("--format must be json or csv");
}

void attach_meta(const RunConfig& cfg, json& doc) {
  if (!cfg.meta) return;
  const auto now = std::chrono::system_clock::now();
  doc["meta"] = {{"tool", "casimir"},
                 {"version", kVersion},
                 {"generated_at", fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now))}};
}

void csv_meta(const RunConfig& cfg, std::ostream& err) {
  if (!cfg.meta) return;
  json doc;
  attach_meta(cfg, doc);
  err << "meta: " << doc["meta"].dump() << '\n';
}

// ---------------------------------------------------------------- force

struct ForceOutcome {
  friction::FrictionResult result;
  json selection;  // regime choice record
};

ForceOutcome compute_force(const RunConfig& cfg) {
  const auto model = cfg.material_model();
  const auto plates = cfg.plate_config();
  const auto thermal = cfg.thermal_state();
  const double v = cfg.velocity_m_s();

  ForceOutcome out;
  std::string regime = cfg.regime;
  out.selection["requested"] = regime;
  if (regime == "auto") {
    if (std::holds_alternative<material::PlasmonLine>(model)) {
      regime = "plasmon";
    } else if (std::holds_alternative<material::Tabulated>(model)) {
      regime = "general";
    } else if (thermal.is_zero()) {
      regime = "zero-t";
    } else {
      const double x = plates.d / (thermal.beta() * hbar * v);
      const double ratio = 16.0 * pi * pi / 15.0 * x * x;
      out.selection["ratio_linear_over_cubic"] = ratio;
      regime = ratio > 1.0 ? "linear" : "zero-t";
    }
  } else if (regime != "linear" && regime != "zero-t" && regime != "general" && regime != "plasmon") {
    throw InvalidConfig("--regime must be auto, linear, zero-t, general or plasmon");
  }
  out.selection["selected"] = regime;

  if (cfg.regime != "auto") {
    if ((regime == "zero-t" || regime == "plasmon") && !thermal.is_zero())
      throw InvalidConfig("--regime " + regime + " contradicts a finite --temp-k");
    if (regime == "linear" && thermal.is_zero())
      throw InvalidConfig("--regime linear requires a finite --temp-k");
  }

  if (regime == "linear") {
    out.result = friction::force_linear(model, plates, thermal, v, cfg.quadrature_spec(false));
  } else if (regime == "zero-t") {
    out.result = friction::force_zero_t(model, plates, v);
  } else if (regime == "general") {
    out.result = friction::dissipation_general(model, model, plates, thermal, v, cfg.quadrature_spec(true));
  } else {
    if (!thermal.is_zero()) throw InvalidConfig("plasmon regime is a zero-temperature result");
    double omega_sp = 0.0;
    if (const auto* p = std::get_if<material::PlasmonLine>(&model)) omega_sp = p->omega_sp;
    else if (const auto* d = std::get_if<material::Drude>(&model)) omega_sp = d->omega_sp();
    else throw InvalidConfig("plasmon regime needs a drude or plasmon model");
    if (!(omega_sp > 0.0)) throw InvalidConfig("plasmon regime needs omega_sp > 0");
    out.result = friction::force_plasmon(omega_sp, plates, v, cfg.quadrature_spec(false));
  }
  return out;
}

json force_json(const RunConfig& cfg, const ForceOutcome& o) {
  const auto& r = o.result;
  json diag;
  diag["quadrature_rel_err"] = r.diagnostics.quadrature_rel_err;
  diag["validity_flags"] = r.diagnostics.validity_flags;
  diag["regime_selection"] = o.selection;
  if (r.diagnostics.suppression_exponent) diag["suppression_exponent"] = *r.diagnostics.suppression_exponent;
  if (r.diagnostics.log_force) diag["log_force"] = *r.diagnostics.log_force;

  json doc;
  doc["inputs"] = cfg.inputs_json();
  doc["force_per_area_N_m2"] = r.force_per_area;
  doc["direction"] = friction::kDirection;
  doc["regime"] = friction::regime_name(r.regime);
  doc["dissipated_power_W_m2"] = r.dissipated_power_per_area;
  doc["diagnostics"] = diag;
  return doc;
}

int cmd_force(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg);
  const auto o = compute_force(cfg);
  for (const auto& flag : o.result.diagnostics.validity_flags) err << "warning: " << flag << '\n';
  if (cfg.format == "csv") {
    csv_meta(cfg, err);
    const auto& r = o.result;
    out << "regime,force_per_area_N_m2,direction,dissipated_power_W_m2,quadrature_rel_err,validity_flags\n";
    out << friction::regime_name(r.regime) << ',' << num(r.force_per_area) << ','
        << friction::kDirection << ',' << num(r.dissipated_power_per_area) << ','
        << num(r.diagnostics.quadrature_rel_err) << ',' << csv_flags(r.diagnostics.validity_flags) << '\n';
    return kExitOk;
  }
  auto doc = force_json(cfg, o);
  attach_meta(cfg, doc);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

// ------------------------------------------------------------- spectrum

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg);
  const auto model = cfg.material_model();
  if (!(cfg.rho1 > 0.0)) throw InvalidConfig("--rho1 must be > 0");

  double lo = 0.0, hi = 0.0;
  if (const auto* d = std::get_if<material::Drude>(&model)) {
    if (d->omega_p > 0.0) {
      lo = 1e-4 * d->omega_p;
      hi = 1e2 * d->omega_p;
    } else {
      lo = 1e12;
      hi = 1e18;
    }
  } else if (const auto* p = std::get_if<material::PlasmonLine>(&model)) {
    lo = 1e-4 * std::numbers::sqrt2 * p->omega_sp;
    hi = 1e2 * std::numbers::sqrt2 * p->omega_sp;
  } else {
    const auto& t = std::get<material::Tabulated>(model);
    lo = t.omega_min();
    hi = t.omega_max();
  }
  if (cfg.omega_min) lo = *cfg.omega_min;
  if (cfg.omega_max) hi = *cfg.omega_max;
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi))
    throw InvalidConfig("spectrum needs 0 < --omega-min <= --omega-max");
  if (cfg.points < 1) throw InvalidConfig("--points must be >= 1");

  const double rho = cfg.rho1;
  const int n = cfg.points;
  struct Row {
    double omega, eps_re, eps_im, im_r, density;
  };
  std::vector<Row> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double omega = n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    const auto eps = material::permittivity(model, omega);
    const double im_r = material::im_response(model, omega);
    const double density = im_r == 0.0 ? 0.0 : -im_r / (2.0 * pi * pi * rho);
    rows.push_back({omega, eps.real(), eps.imag(), im_r, density});
  }

  if (cfg.format == "json") {
    json doc;
    doc["inputs"] = cfg.inputs_json();
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"omega_rad_s", r.omega},
                     {"eps_re", r.eps_re},
                     {"eps_im", r.eps_im},
                     {"im_R", r.im_r},
                     {"spectral_density", r.density}});
    doc["rows"] = arr;
    attach_meta(cfg, doc);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  csv_meta(cfg, err);
  out << "omega_rad_s,eps_re,eps_im,im_R,spectral_density\n";
  for (const auto& r : rows)
    out << num(r.omega) << ',' << num(r.eps_re) << ',' << num(r.eps_im) << ',' << num(r.im_r) << ','
        << num(r.density) << '\n';
  return kExitOk;
}

// ------------------------------------------------------------ dissipate

int cmd_dissipate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg);
  if (!(cfg.tau > 0.0) || !std::isfinite(cfg.tau)) throw InvalidConfig("--tau must be finite and > 0");
  if (!(cfg.alpha > 0.0) || !std::isfinite(cfg.alpha)) throw InvalidConfig("--alpha must be finite and > 0");
  if (!std::isfinite(cfg.omega_v)) throw InvalidConfig("--omega-v must be finite");
  if (!(cfg.width > 0.0)) throw InvalidConfig("--width must be > 0");
  if (cfg.doublings < 1) throw InvalidConfig("--doublings must be >= 1");
  if (cfg.points < 1) throw InvalidConfig("--points must be >= 1");

  const double wv = cfg.omega_v;
  const double w_max = cfg.omega_max ? *cfg.omega_max : 3.0 * std::max(std::abs(wv), 1.0);
  if (!(w_max > 0.0)) throw InvalidConfig("--omega-max must be > 0");

  const trajectory::LoopTrajectory finite{1.0, cfg.tau, cfg.alpha};
  const trajectory::LoopTrajectory infinite{1.0, cfg.tau};
  std::vector<double> grid;
  for (int i = 1; i <= cfg.points; ++i) grid.push_back(w_max * i / cfg.points);

  struct ProfileRow {
    double omega, q_finite, q_infinite, kernel;
  };
  std::vector<ProfileRow> profile;
  for (double w : grid) {
    const double qf = trajectory::qhat_closed_form(w, wv, finite).real();
    const double qi = trajectory::qhat_closed_form(w, wv, infinite).real();
    profile.push_back({w, qf, qi, trajectory::finite_tau_kernel(w, wv, infinite)});
  }

  json alpha_rows = json::array();
  for (double scale : {1.0, 10.0, 100.0, 1000.0}) {
    const trajectory::LoopTrajectory t{1.0, cfg.tau, cfg.alpha * scale};
    double max_diff = 0.0;
    for (double w : grid)
      max_diff = std::max(max_diff, std::abs(trajectory::qhat_closed_form(w, wv, t).real() -
                                             trajectory::qhat_closed_form(w, wv, infinite).real()));
    alpha_rows.push_back({{"alpha", cfg.alpha * scale}, {"max_abs_diff_vs_infinite", max_diff}});
  }

  json conv = json::array();
  if (wv != 0.0) {
    const auto study = trajectory::delta_convergence_study(wv, cfg.width, cfg.tau, cfg.doublings,
                                                           cfg.quadrature_spec(false));
    for (const auto& r : study)
      conv.push_back({{"tau", r.tau},
                      {"integral", r.integral},
                      {"prediction", r.prediction},
                      {"rel_error", r.rel_error},
                      {"error_ratio", r.error_ratio}});
  } else {
    err << "warning: omega_v = 0, the delta-limit kernel vanishes and no convergence table is produced\n";
  }

  if (cfg.format == "csv") {
    csv_meta(cfg, err);
    out << "omega_rad_s,qhat_finite_alpha,qhat_infinite_alpha,abs2_finite_alpha,abs2_infinite_alpha,kernel\n";
    for (const auto& r : profile)
      out << num(r.omega) << ',' << num(r.q_finite) << ',' << num(r.q_infinite) << ','
          << num(r.q_finite * r.q_finite) << ',' << num(r.q_infinite * r.q_infinite) << ','
          << num(r.kernel) << '\n';
    return kExitOk;
  }

  json doc;
  doc["inputs"] = {{"tau", cfg.tau},     {"alpha", cfg.alpha},         {"omega_v", wv},
                   {"width", cfg.width}, {"doublings", cfg.doublings}, {"points", cfg.points}};
  json prof = json::array();
  for (const auto& r : profile)
    prof.push_back({{"omega", r.omega},
                    {"qhat_finite_alpha", r.q_finite},
                    {"qhat_infinite_alpha", r.q_infinite},
                    {"abs2_finite_alpha", r.q_finite * r.q_finite},
                    {"abs2_infinite_alpha", r.q_infinite * r.q_infinite},
                    {"kernel", r.kernel}});
  doc["profile"] = prof;
  doc["convergence"] = conv;
  doc["alpha_convergence"] = alpha_rows;
  attach_meta(cfg, doc);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

// -------------------------------------------------------------- compare

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg);
  const auto model = cfg.material_model();
  const auto* drude = std::get_if<material::Drude>(&model);
  if (!drude) throw InvalidConfig("compare requires --model drude");
  const auto plates = cfg.plate_config();
  const auto thermal = cfg.thermal_state();
  const double v = cfg.velocity_m_s();

  const auto report = compare::consistency_report(*drude, plates, thermal, v);
  for (const auto& c : report.checks)
    if (!c.passed) err << "check failed: " << c.name << '\n';

  if (cfg.format == "csv") {
    csv_meta(cfg, err);
    out << "name,value,expected,rel_tol,passed\n";
    for (const auto& c : report.checks)
      out << '"' << c.name << "\"," << num(c.value) << ',' << num(c.expected) << ','
          << num(c.rel_tol) << ',' << (c.passed ? "true" : "false") << '\n';
  } else {
    json doc;
    doc["inputs"] = cfg.inputs_json();
    doc["F_ours_linear"] = report.f_ours_linear ? json(*report.f_ours_linear) : json(nullptr);
    doc["F_ours_zeroT"] = report.f_ours_zero_t;
    doc["F_Pendry"] = report.f_pendry;
    doc["F_VP"] = report.f_vp;
    doc["F_B"] = report.f_barton;
    doc["ratio"] = report.ratio_linear_over_cubic ? json(*report.ratio_linear_over_cubic) : json(nullptr);
    doc["expected_ratio"] = report.expected_ratio ? json(*report.expected_ratio) : json(nullptr);
    doc["pendry_within_validity"] = report.pendry_within_validity;
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name},
                        {"value", c.value},
                        {"expected", c.expected},
                        {"rel_tol", c.rel_tol},
                        {"passed", c.passed}});
    doc["checks"] = checks;
    doc["all_passed"] = report.all_passed();
    doc["annotations"] = report.annotations;
    attach_meta(cfg, doc);
    out << doc.dump(2) << '\n';
  }
  return report.all_passed() ? kExitOk : kExitNumerical;
}

// ---------------------------------------------------------------- sweep

RunConfig sweep_point(const RunConfig& base, double value) {
  RunConfig c = base;
  if (base.param == "velocity") c.velocity = value;
  else if (base.param == "gap") c.gap_nm = value;
  else c.temp_k = fmt::format("{}", value);
  return c;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg);
  if (cfg.param != "velocity" && cfg.param != "gap" && cfg.param != "temp")
    throw InvalidConfig("--param must be velocity, gap or temp");
  if (cfg.scale != "lin" && cfg.scale != "log") throw InvalidConfig("--scale must be lin or log");
  if (!cfg.from || !cfg.to) throw InvalidConfig("sweep needs --from and --to");
  if (cfg.points < 1) throw InvalidConfig("--points must be >= 1");
  if (cfg.jobs < 1) throw InvalidConfig("--jobs must be >= 1");
  const double a = *cfg.from, b = *cfg.to;
  if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidConfig("--from and --to must be finite");
  if (cfg.scale == "log" && !(a > 0.0 && b > 0.0)) throw InvalidConfig("log sweep needs --from, --to > 0");

  const int n = cfg.points;
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) {
    const double f = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    xs[i] = cfg.scale == "log" ? a * std::pow(b / a, f) : a + (b - a) * f;
  }
  // Validate every point up front so input errors win over numerical ones.
  for (double x : xs) {
    const auto c = sweep_point(cfg, x);
    c.material_model();
    c.plate_config();
    c.thermal_state();
    c.velocity_m_s();
  }

  std::vector<friction::FrictionResult> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        results[i] = compute_force(sweep_point(cfg, xs[i])).result;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::min(cfg.jobs, n);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  bool loggable = true;
  for (int i = 0; i < n; ++i) loggable = loggable && xs[i] > 0.0 && results[i].force_per_area > 0.0;
  std::vector<double> lx(n), ly(n), local(n, std::nan(""));
  double fit = std::nan("");
  if (loggable && n >= 2) {
    for (int i = 0; i < n; ++i) {
      lx[i] = std::log(xs[i]);
      ly[i] = std::log(results[i].force_per_area);
    }
    for (int i = 0; i < n; ++i) {
      const int l = std::max(i - 1, 0), r = std::min(i + 1, n - 1);
      if (lx[r] != lx[l]) local[i] = (ly[r] - ly[l]) / (lx[r] - lx[l]);
    }
    fit = numerics::fit_slope(lx, ly);
  }
  for (const auto& r : results)
    for (const auto& flag : r.diagnostics.validity_flags) err << "warning: " << flag << '\n';

  const std::string column = cfg.param == "velocity" ? "velocity_m_s" : cfg.param == "gap" ? "gap_nm" : "temp_k";
  if (cfg.format == "json") {
    json doc;
    doc["inputs"] = cfg.inputs_json();
    doc["param"] = cfg.param;
    json rows = json::array();
    for (int i = 0; i < n; ++i)
      rows.push_back({{"index", i},
                      {column, xs[i]},
                      {"force_per_area_N_m2", results[i].force_per_area},
                      {"regime", friction::regime_name(results[i].regime)},
                      {"local_slope", std::isnan(local[i]) ? json(nullptr) : json(local[i])}});
    doc["rows"] = rows;
    doc["fit_slope"] = std::isnan(fit) ? json(nullptr) : json(fit);
    attach_meta(cfg, doc);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  csv_meta(cfg, err);
  out << "index," << column << ",force_per_area_N_m2,regime,local_slope,fit_slope\n";
  for (int i = 0; i < n; ++i)
    out << i << ',' << num(xs[i]) << ',' << num(results[i].force_per_area) << ','
        << friction::regime_name(results[i].regime) << ','
        << (std::isnan(local[i]) ? std::string() : num(local[i])) << ','
        << (std::isnan(fit) ? std::string() : num(fit)) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- parser

template <class T>
void opt(CLI::App* app, const std::string& name, std::optional<T>& target, const std::string& help) {
  app->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

void add_material(CLI::App* app, RunConfig& cfg) {
  app->add_option("--model", cfg.model, "drude | plasmon | tabulated");
  opt(app, "--wp-ev", cfg.wp_ev, "plasma energy hbar omega_p [eV]");
  opt(app, "--nu-ev", cfg.nu_ev, "damping hbar nu [eV]");
  opt(app, "--wsp-ev", cfg.wsp_ev, "surface plasmon energy hbar omega_sp [eV]");
  app->add_option("--eps-file", cfg.eps_file, "CSV omega_rad_s,eps_re,eps_im");
  app->add_option("--rho1", cfg.rho1, "oscillator density of plate 1 [1/m^3]");
  app->add_option("--rho2", cfg.rho2, "oscillator density of plate 2 [1/m^3]");
}

void add_conditions(CLI::App* app, RunConfig& cfg) {
  opt(app, "--gap-nm", cfg.gap_nm, "plate separation [nm]");
  app->add_option("--temp-k", cfg.temp_k, "temperature [K] or 'zero'");
  opt(app, "--velocity", cfg.velocity, "sliding velocity [m/s]");
  app->add_option("--regime", cfg.regime, "auto | linear | zero-t | general | plasmon");
}

void add_common(CLI::App* app, RunConfig& cfg, std::string& config_path) {
  app->add_option("--config", config_path, "JSON config file; flags override it");
  app->add_option("--format", cfg.format, "json | csv");
  opt(app, "--rtol", cfg.rtol, "quadrature relative tolerance");
  opt(app, "--max-subdivisions", cfg.max_subdivisions, "quadrature subdivision limit");
  app->add_flag("--meta", cfg.meta, "add run metadata");
}

std::string find_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    RunConfig cfg;
    const auto path = find_config_path(args);
    if (!path.empty()) cfg = load_config_file(path);
    std::string config_path;

    CLI::App app{"Casimir friction between sliding half-spaces", "casimir"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    auto* force = app.add_subcommand("force", "friction force per unit area");
    add_material(force, cfg);
    add_conditions(force, cfg);
    add_common(force, cfg, config_path);

    auto* spectrum = app.add_subcommand("spectrum", "permittivity, Im R and spectral density on a log grid");
    add_material(spectrum, cfg);
    add_common(spectrum, cfg, config_path);
    opt(spectrum, "--omega-min", cfg.omega_min, "lowest frequency [rad/s]");
    opt(spectrum, "--omega-max", cfg.omega_max, "highest frequency [rad/s]");
    spectrum->add_option("--points", cfg.points, "number of grid points");

    auto* dissipate = app.add_subcommand("dissipate", "finite-tau trajectory kernel diagnostics");
    add_common(dissipate, cfg, config_path);
    dissipate->add_option("--tau", cfg.tau, "half-duration of the sliding window [s]");
    dissipate->add_option("--alpha", cfg.alpha, "return-leg slowdown factor");
    dissipate->add_option("--omega-v", cfg.omega_v, "k_x v [rad/s]");
    dissipate->add_option("--width", cfg.width, "Gaussian test-function width [rad/s]");
    dissipate->add_option("--doublings", cfg.doublings, "number of tau doublings");
    dissipate->add_option("--points", cfg.points, "profile points");
    opt(dissipate, "--omega-max", cfg.omega_max, "profile upper frequency [rad/s]");

    auto* cmp = app.add_subcommand("compare", "consistency report against literature closed forms");
    add_material(cmp, cfg);
    add_conditions(cmp, cfg);
    add_common(cmp, cfg, config_path);

    auto* sweep = app.add_subcommand("sweep", "force over a parameter range");
    add_material(sweep, cfg);
    add_conditions(sweep, cfg);
    add_common(sweep, cfg, config_path);
    sweep->add_option("--param", cfg.param, "velocity | gap | temp");
    opt(sweep, "--from", cfg.from, "first value");
    opt(sweep, "--to", cfg.to, "last value");
    sweep->add_option("--points", cfg.points, "number of points");
    sweep->add_option("--scale", cfg.scale, "lin | log");
    sweep->add_option("--jobs", cfg.jobs, "concurrent evaluations");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) {
        app.exit(e, err, err);
        return kExitOk;
      }
      err << "error: " << e.what() << '\n';
      return kExitInvalid;
    }

    if (force->parsed()) return cmd_force(cfg, out, err);
    if (spectrum->parsed()) return cmd_spectrum(cfg, out, err);
    if (dissipate->parsed()) return cmd_dissipate(cfg, out, err);
    if (cmp->parsed()) return cmd_compare(cfg, out, err);
    return cmd_sweep(cfg, out, err);
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const UnequalDensities& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const SpectrumCutoffExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const NonConvergence& e) {
    err << "numerical failure: " << e.what() << " (value " << num(e.value()) << ", error estimate "
        << num(e.err_estimate()) << ")\n";
    return kExitNumerical;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace casimir::cli
