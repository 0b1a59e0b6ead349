#pragma once

// Friction force per unit area between two sliding half-spaces.
//
//   force_linear        F = G v H0                       (finite T, small v)
//   force_zero_t        F = (15 pi^2 / 64 d^6) rho^2 D^2 (hbar v)^3
//   dissipation_general F = (hbar / 4 pi^3) int |k_x| dk_x int e^{-2qd} dk_y K(|k_x| v)
//   force_plasmon       the same integral for a delta-line Im R at omega_sp
//
// Forces are reported as magnitudes; the force always opposes the relative
// motion.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/geometry.hpp"
#include "casimir/material.hpp"
#include "casimir/numerics.hpp"
#include "casimir/response.hpp"

namespace casimir::friction {

enum class Regime { LinearFiniteT, ZeroTCubic, GeneralNumeric, PlasmonLine };

std::string_view regime_name(Regime regime);

inline constexpr std::string_view kDirection = "opposes_motion";

// Validity flag strings.
inline constexpr std::string_view kFlagThermalNearPlasmon = "thermal_energy_near_small_m_cutoff";
inline constexpr std::string_view kFlagVelocityBeyondSmallM = "velocity_beyond_small_m_validity";
inline constexpr std::string_view kFlagUnderflow = "underflow_exponential_suppression";

struct Diagnostics {
  double quadrature_rel_err = 0.0;
  std::vector<std::string> validity_flags;
  /// 4 omega_sp d / v for the plasmon line.
  std::optional<double> suppression_exponent;
  /// ln F, available even when F underflows.
  std::optional<double> log_force;

  bool has_flag(std::string_view flag) const;
};

struct FrictionResult {
  double force_per_area = 0.0;             // N/m^2, >= 0
  Regime regime = Regime::LinearFiniteT;
  double dissipated_power_per_area = 0.0;  // Delta E / (2 tau), W/m^2
  Diagnostics diagnostics;
};

/// Linear-in-v friction at finite temperature. Drude material uses the
/// closed form; a tabulated material integrates H0 over its spectrum.
FrictionResult force_linear(const material::MaterialModel& material,
                            const geometry::PlateConfig& config,
                            const response::ThermalState& thermal, double v,
                            const numerics::QuadratureSpec& spec = numerics::default_spec());

/// F = G v H0 for explicit spectra of the two plates.
FrictionResult force_linear_from_spectra(const material::SpectralDensity& s1,
                                         const material::SpectralDensity& s2,
                                         const geometry::PlateConfig& config,
                                         const response::ThermalState& thermal, double v,
                                         const numerics::QuadratureSpec& spec = numerics::default_spec());

/// Cubic zero-temperature friction of two equal Drude plates (closed form).
FrictionResult force_zero_t(const material::MaterialModel& material,
                            const geometry::PlateConfig& config, double v);

/// Full k-space pipeline for continuous materials at any temperature.
/// Nesting: omega1 convolution innermost, then k_y, then k_x.
FrictionResult dissipation_general(const material::MaterialModel& material1,
                                   const material::MaterialModel& material2,
                                   const geometry::PlateConfig& config,
                                   const response::ThermalState& thermal, double v,
                                   const numerics::QuadratureSpec& spec = numerics::default_nested_spec());

/// Zero-temperature friction of two surface-plasmon lines at omega_sp.
FrictionResult force_plasmon(double omega_sp, const geometry::PlateConfig& config, double v,
                             const numerics::QuadratureSpec& spec = numerics::default_spec());

/// int_0^inf exp(-2 sqrt(s^2 + t^2)) dt by quadrature, scaled by exp(2 s).
/// Equals s K_1(2 s) exp(2 s).
numerics::QuadratureResult<double> scaled_ky_integral(double s, const numerics::QuadratureSpec& spec);

}  // namespace casimir::friction
