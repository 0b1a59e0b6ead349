#include "cli/run_config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "casimir/errors.hpp"

namespace casimir::cli {

namespace {

using nlohmann::json;

double positive(std::optional<double> value, const char* flag) {
  if (!value) throw InvalidConfig(std::string("missing required --") + flag);
  if (!(*value > 0.0) || !std::isfinite(*value))
    throw InvalidConfig(std::string("--") + flag + " must be a positive number");
  return *value;
}

template <class T>
void take(const json& doc, const char* key, T& target) {
  if (!doc.contains(key)) return;
  try {
    target = doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidConfig(std::string("config key '") + key + "' has the wrong type");
  }
}

template <class T>
void take(const json& doc, const char* key, std::optional<T>& target) {
  if (!doc.contains(key)) return;
  T value{};
  take(doc, key, value);
  target = value;
}

}  // namespace

void RunConfig::merge_json(const json& doc) {
  if (!doc.is_object()) throw InvalidConfig("config file must hold a JSON object");
  static const char* known[] = {"model",    "wp-ev",  "nu-ev",     "wsp-ev",     "eps-file",
                                "gap-nm", "temp-k",    "velocity",   "rho1",
                                "rho2",     "regime", "format",    "rtol",       "max-subdivisions",
                                "meta",     "omega-min", "omega-max", "points",  "tau",
                                "alpha",    "omega-v", "width",    "doublings",  "param",
                                "from",     "to",     "scale",     "jobs"};
  for (const auto& item : doc.items()) {
    bool found = false;
    for (const char* k : known) found = found || item.key() == k;
    if (!found) throw InvalidConfig("unknown config key '" + item.key() + "'");
  }
  take(doc, "model", model);
  take(doc, "wp-ev", wp_ev);
  take(doc, "nu-ev", nu_ev);
  take(doc, "wsp-ev", wsp_ev);
  take(doc, "eps-file", eps_file);
  take(doc, "gap-nm", gap_nm);
  if (doc.contains("temp-k")) {
    const auto& t = doc.at("temp-k");
    if (t.is_string()) temp_k = t.get<std::string>();
    else if (t.is_number()) temp_k = t.dump();
    else throw InvalidConfig("config key 'temp-k' must be a number or \"zero\"");
  }
  take(doc, "velocity", velocity);
  take(doc, "rho1", rho1);
  take(doc, "rho2", rho2);
  take(doc, "regime", regime);
  take(doc, "format", format);
  take(doc, "rtol", rtol);
  take(doc, "max-subdivisions", max_subdivisions);
  take(doc, "meta", meta);
  take(doc, "omega-min", omega_min);
  take(doc, "omega-max", omega_max);
  take(doc, "points", points);
  take(doc, "tau", tau);
  take(doc, "alpha", alpha);
  take(doc, "omega-v", omega_v);
  take(doc, "width", width);
  take(doc, "doublings", doublings);
  take(doc, "param", param);
  take(doc, "from", from);
  take(doc, "to", to);
  take(doc, "scale", scale);
  take(doc, "jobs", jobs);
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidConfig("cannot open config file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidConfig(std::string("config file is not valid JSON: ") + e.what());
  }
  RunConfig cfg;
  cfg.merge_json(doc);
  return cfg;
}

json RunConfig::inputs_json() const {
  json j;
  j["model"] = model;
  if (wp_ev) j["wp_ev"] = *wp_ev;
  if (nu_ev) j["nu_ev"] = *nu_ev;
  if (wsp_ev) j["wsp_ev"] = *wsp_ev;
  if (!eps_file.empty()) j["eps_file"] = eps_file;
  if (gap_nm) j["gap_nm"] = *gap_nm;
  if (!temp_k.empty()) j["temp_k"] = temp_k;
  if (velocity) j["velocity_m_s"] = *velocity;
  j["rho1_m3"] = rho1;
  j["rho2_m3"] = rho2;
  j["regime"] = regime;
  return j;
}

material::MaterialModel RunConfig::material_model() const {
  if (model == "drude") {
    if (!wp_ev) throw InvalidConfig("missing required --wp-ev");
    if (!(*wp_ev >= 0.0) || !std::isfinite(*wp_ev)) throw InvalidConfig("--wp-ev must be >= 0");
    if (!nu_ev) throw InvalidConfig("missing required --nu-ev");
    if (!(*nu_ev >= 0.0) || !std::isfinite(*nu_ev)) throw InvalidConfig("--nu-ev must be >= 0");
    return material::Drude{numerics::ev_to_rad_per_s(*wp_ev), numerics::ev_to_rad_per_s(*nu_ev)};
  }
  if (model == "plasmon") {
    if (wsp_ev) return material::PlasmonLine{numerics::ev_to_rad_per_s(positive(wsp_ev, "wsp-ev"))};
    const double wp = positive(wp_ev, "wp-ev");
    return material::PlasmonLine{numerics::ev_to_rad_per_s(wp) / std::numbers::sqrt2};
  }
  if (model == "tabulated") {
    if (eps_file.empty()) throw InvalidConfig("missing required --eps-file");
    try {
      return material::Tabulated::from_csv_file(eps_file);
    } catch (const DomainError& e) {
      throw InvalidConfig(e.what());
    }
  }
  throw InvalidConfig("--model must be drude, plasmon or tabulated");
}

geometry::PlateConfig RunConfig::plate_config() const {
  geometry::PlateConfig c;
  c.d = numerics::nm_to_m(positive(gap_nm, "gap-nm"));
  c.rho1 = positive(rho1, "rho1");
  c.rho2 = positive(rho2, "rho2");
  return c;
}

response::ThermalState RunConfig::thermal_state() const {
  if (temp_k.empty()) throw InvalidConfig("missing required --temp-k (number or 'zero')");
  if (temp_k == "zero") return response::ThermalState::zero();
  double t = 0.0;
  try {
    std::size_t used = 0;
    t = std::stod(temp_k, &used);
    if (used != temp_k.size()) throw InvalidConfig("");
  } catch (const std::exception&) {
    throw InvalidConfig("--temp-k must be a number or 'zero'");
  }
  if (t == 0.0) return response::ThermalState::zero();
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidConfig("--temp-k must be > 0 or 'zero'");
  return response::ThermalState::finite(t);
}

double RunConfig::velocity_m_s() const { return positive(velocity, "velocity"); }

numerics::QuadratureSpec RunConfig::quadrature_spec(bool nested) const {
  numerics::QuadratureSpec spec;
  try {
    spec = nested ? numerics::default_nested_spec() : numerics::default_spec();
  } catch (const DomainError& e) {
    throw InvalidConfig(e.what());
  }
  if (rtol) spec.rel_tol = positive(rtol, "rtol");
  if (max_subdivisions) {
    if (*max_subdivisions < 1) throw InvalidConfig("--max-subdivisions must be >= 1");
    spec.max_subdivisions = *max_subdivisions;
  }
  return spec;
}

}  // namespace casimir::cli
