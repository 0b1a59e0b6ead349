#pragma once

// Literature closed forms for zero-temperature friction and the consistency
// chain Pendry : Volokitin-Persson : Barton = 1 : 6 : 12 against this
// library's results.

#include <optional>
#include <string>
#include <vector>

#include "casimir/geometry.hpp"
#include "casimir/material.hpp"
#include "casimir/response.hpp"

namespace casimir::compare {

struct LiteratureParams {
  double sigma_over_eps0 = 0.0;  // rad/s
  double d = 0.0;                // m
  double v = 0.0;                // m/s
  double beta_metal = 1.0;       // Barton's beta, 1 for metals

  /// sigma / eps0 = omega_p^2 / nu.
  static LiteratureParams from_drude(const material::Drude& model, double d, double v);
  void validate() const;
};

struct PendryResult {
  double force = 0.0;
  bool within_validity = true;  // v < d sigma / eps0
};

/// 5 hbar v^3 / (2^8 pi^2 (sigma/eps0)^2 d^6).
PendryResult pendry_force(const LiteratureParams& p);
inline double volokitin_persson_force(const LiteratureParams& p) { return 6.0 * pendry_force(p).force; }
inline double barton_force(const LiteratureParams& p) { return 12.0 * pendry_force(p).force; }

struct Check {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double rel_tol = 0.0;
  bool passed = false;
};

struct ConsistencyReport {
  std::optional<double> f_ours_linear;  // absent at T = 0
  double f_ours_zero_t = 0.0;
  double f_pendry = 0.0;
  double f_vp = 0.0;
  double f_barton = 0.0;
  std::optional<double> ratio_linear_over_cubic;
  std::optional<double> expected_ratio;  // (1/12)(64 pi^2 / 5)(d / (beta hbar v))^2
  bool pendry_within_validity = true;
  std::vector<Check> checks;
  std::vector<std::string> annotations;

  bool all_passed() const;
};

inline constexpr double kCheckTolerance = 1e-12;

ConsistencyReport consistency_report(const material::Drude& material,
                                     const geometry::PlateConfig& config,
                                     const response::ThermalState& thermal, double v);

}  // namespace casimir::compare
