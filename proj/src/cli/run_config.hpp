#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "casimir/geometry.hpp"
#include "casimir/material.hpp"
#include "casimir/numerics.hpp"
#include "casimir/response.hpp"

namespace casimir::cli {

/// Rejected command-line or config-file input (exit code 2).
class InvalidConfig : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every flag of every subcommand. Physical inputs use CLI units (eV, nm, K,
/// m/s) and are converted to SI by the accessors below.
struct RunConfig {
  std::string model = "drude";  // drude | plasmon | tabulated
  std::optional<double> wp_ev;
  std::optional<double> nu_ev;
  std::optional<double> wsp_ev;
  std::string eps_file;

  std::optional<double> gap_nm;
  std::string temp_k;  // number or "zero"
  std::optional<double> velocity;
  double rho1 = 1e28;
  double rho2 = 1e28;

  std::string regime = "auto";  // auto | linear | zero-t | general | plasmon
  std::string format = "json";  // json | csv

  std::optional<double> rtol;
  std::optional<int> max_subdivisions;
  bool meta = false;

  // spectrum
  std::optional<double> omega_min;
  std::optional<double> omega_max;
  int points = 200;

  // dissipate (dimensionless test units are fine: omega in rad/s, tau in s)
  double tau = 50.0;
  double alpha = 50.0;
  double omega_v = 1.0;
  double width = 0.1;
  int doublings = 3;

  // sweep
  std::string param;  // velocity | gap | temp
  std::optional<double> from;
  std::optional<double> to;
  std::string scale = "log";  // lin | log
  int jobs = 1;

  /// Applies the keys of a config-file JSON object (flag names without
  /// dashes, e.g. "wp-ev"). Unknown keys are rejected.
  void merge_json(const nlohmann::json& doc);

  nlohmann::json inputs_json() const;

  // Validated SI views.
  material::MaterialModel material_model() const;
  geometry::PlateConfig plate_config() const;
  response::ThermalState thermal_state() const;
  double velocity_m_s() const;
  numerics::QuadratureSpec quadrature_spec(bool nested) const;
  bool has_temperature() const { return !temp_k.empty(); }
};

RunConfig load_config_file(const std::string& path);

}  // namespace casimir::cli
