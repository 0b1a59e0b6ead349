#include "casimir/friction.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/errors.hpp"

namespace casimir::friction {

namespace {

using numerics::constants::hbar;
using numerics::constants::k_B;
using numerics::constants::pi;

constexpr double kUnderflowExponent = 700.0;

void check_velocity(double v, const char* op) {
  if (!(v >= 0.0) || !std::isfinite(v))
    throw DomainError(std::string(op) + ": velocity must be finite and >= 0");
}

const material::Drude& require_drude(const material::MaterialModel& m, const char* op) {
  const auto* d = std::get_if<material::Drude>(&m);
  if (!d) throw DomainError(std::string(op) + ": closed form requires a Drude material");
  d->validate();
  if (!(d->omega_p > 0.0) || !(d->nu > 0.0))
    throw DomainError(std::string(op) + ": closed form requires omega_p > 0 and nu > 0");
  return *d;
}

FrictionResult make_result(double force, double v, Regime regime) {
  FrictionResult r;
  r.force_per_area = force;
  r.regime = regime;
  r.dissipated_power_per_area = force * v;
  return r;
}

// Rethrows a non-converged integral with the nesting level in the message.
template <class F>
auto at_level(const char* level, F&& body) {
  try {
    return body();
  } catch (const NonConvergence& e) {
    throw NonConvergence(std::string("dissipation_general: ") + level + " integral: " + e.what(),
                         e.value(), e.err_estimate());
  }
}

}  // namespace

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::LinearFiniteT:
      return "LinearFiniteT";
    case Regime::ZeroTCubic:
      return "ZeroT_Cubic";
    case Regime::GeneralNumeric:
      return "GeneralNumeric";
    case Regime::PlasmonLine:
      return "PlasmonLine";
  }
  return "unknown";
}

bool Diagnostics::has_flag(std::string_view flag) const {
  return std::find(validity_flags.begin(), validity_flags.end(), flag) != validity_flags.end();
}

FrictionResult force_linear_from_spectra(const material::SpectralDensity& s1,
                                         const material::SpectralDensity& s2,
                                         const geometry::PlateConfig& config,
                                         const response::ThermalState& thermal, double v,
                                         const numerics::QuadratureSpec& spec) {
  config.validate();
  check_velocity(v, "force_linear");
  if (thermal.is_zero()) throw DomainError("force_linear: requires finite temperature");
  const double g = geometry::k_moment(2, config);
  const auto h = response::h0(s1, s2, thermal, spec);
  auto r = make_result(g * v * h.value, v, Regime::LinearFiniteT);
  r.diagnostics.quadrature_rel_err = h.value != 0.0 ? h.err_estimate / h.value : 0.0;

  const double thermal_energy = k_B * thermal.temperature();
  const double cutoff = std::min(s1.small_m() ? s1.small_m()->m_max : s1.m_max(),
                                 s2.small_m() ? s2.small_m()->m_max : s2.m_max());
  if (thermal_energy > 0.1 * cutoff)
    r.diagnostics.validity_flags.emplace_back(kFlagThermalNearPlasmon);
  return r;
}

FrictionResult force_linear(const material::MaterialModel& material,
                            const geometry::PlateConfig& config,
                            const response::ThermalState& thermal, double v,
                            const numerics::QuadratureSpec& spec) {
  config.validate();
  check_velocity(v, "force_linear");
  if (thermal.is_zero()) throw DomainError("force_linear: requires finite temperature");
  if (material::is_line_spectrum(material))
    throw DomainError("force_linear: a single plasmon line has no low-frequency spectrum");

  if (std::holds_alternative<material::Drude>(material)) {
    require_drude(material, "force_linear");
    // Closed form through the small-m slopes of both plates.
    const auto s1 = material::spectral_density_from_R(material, config.rho1).small_m_approximation();
    const auto s2 = material::spectral_density_from_R(material, config.rho2).small_m_approximation();
    return force_linear_from_spectra(s1, s2, config, thermal, v, spec);
  }
  const auto s1 = material::spectral_density_from_R(material, config.rho1);
  const auto s2 = material::spectral_density_from_R(material, config.rho2);
  return force_linear_from_spectra(s1, s2, config, thermal, v, spec);
}

FrictionResult force_zero_t(const material::MaterialModel& material,
                            const geometry::PlateConfig& config, double v) {
  config.validate();
  check_velocity(v, "force_zero_t");
  const auto& drude = require_drude(material, "force_zero_t");
  if (config.rho1 != config.rho2) throw UnequalDensities("force_zero_t: requires rho1 == rho2");

  const double slope = material::drude_slope(drude, config.rho1);
  // Delta E_P / (2 tau v) = H_P v^3 G_P with H_P = (pi/6) hbar^3 D^2.
  const double h_p = pi / 6.0 * hbar * hbar * hbar * slope * slope;
  const double g_p = geometry::k_moment(4, config);
  auto r = make_result(h_p * v * v * v * g_p, v, Regime::ZeroTCubic);
  if (hbar * v / config.d > material::default_small_m_cutoff(drude))
    r.diagnostics.validity_flags.emplace_back(kFlagVelocityBeyondSmallM);
  return r;
}

numerics::QuadratureResult<double> scaled_ky_integral(double s, const numerics::QuadratureSpec& spec) {
  if (!(s >= 0.0)) throw DomainError("scaled_ky_integral: s must be >= 0");
  // sqrt(s^2 + t^2) - s written without cancellation; Gaussian width ~ sqrt(s).
  auto integrand = [s](double t) {
    const double excess = t * t / (std::hypot(s, t) + s);
    return std::exp(-2.0 * excess);
  };
  return numerics::integrate_semi_infinite(integrand, 0.0,
                                           spec.with_decay_scale(0.5 + 0.5 * std::sqrt(s)));
}

FrictionResult dissipation_general(const material::MaterialModel& material1,
                                   const material::MaterialModel& material2,
                                   const geometry::PlateConfig& config,
                                   const response::ThermalState& thermal, double v,
                                   const numerics::QuadratureSpec& spec) {
  config.validate();
  check_velocity(v, "dissipation_general");
  if (material::is_line_spectrum(material1) || material::is_line_spectrum(material2))
    throw DomainError("dissipation_general: use force_plasmon for line spectra");
  if (v == 0.0) return make_result(0.0, 0.0, Regime::GeneralNumeric);

  const double d = config.d;
  double inner_rel_err = 0.0;
  // s = k_x d. F = (hbar / pi^3 d^3) int_0^inf s K(s v / d) y(s) ds, where
  // y(s) = int_0^inf exp(-2 sqrt(s^2 + t^2)) dt carries the k_y integration.
  auto outer = [&](double s) {
    if (s <= 0.0) return 0.0;
    const double exponent = 2.0 * s;
    if (exponent > kUnderflowExponent) return 0.0;
    const auto kernel = at_level("omega1", [&] {
      return response::dissipation_kernel(s * v / d, material1, material2, thermal, spec);
    });
    const double k_total = kernel.total();
    if (k_total == 0.0) return 0.0;
    const auto ky = at_level("k_y", [&] { return scaled_ky_integral(s, spec); });
    const double k_err = kernel.sum_channel.err_estimate + kernel.difference_channel.err_estimate;
    inner_rel_err = std::max(inner_rel_err, k_err / std::abs(k_total) + ky.err_estimate / ky.value);
    return s * k_total * ky.value * std::exp(-exponent);
  };
  const auto r = at_level("k_x", [&] {
    return numerics::integrate_semi_infinite(outer, 0.0, spec.with_decay_scale(0.5));
  });
  const double scale = hbar / (pi * pi * pi * d * d * d);
  auto result = make_result(scale * r.value, v, Regime::GeneralNumeric);
  result.diagnostics.quadrature_rel_err =
      (r.value != 0.0 ? r.err_estimate / std::abs(r.value) : 0.0) + inner_rel_err;
  return result;
}

FrictionResult force_plasmon(double omega_sp, const geometry::PlateConfig& config, double v,
                             const numerics::QuadratureSpec& spec) {
  config.validate();
  material::PlasmonLine{omega_sp}.validate();
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("force_plasmon: velocity must be > 0");

  const auto conv = response::j_general_convolution(0.0, material::PlasmonLine{omega_sp},
                                                    material::PlasmonLine{omega_sp}, spec);
  // delta(|k_x| v - W0) fixes |k_x| = k0 = W0 / v on both signs of k_x.
  const double k0 = conv.support / v;
  const double s0 = k0 * config.d;
  const double exponent = 2.0 * s0;  // = 4 omega_sp d / v
  const auto ky = scaled_ky_integral(s0, spec);
  // F = (hbar / 4 pi^3) * weight * 2 k0 / v * 2 int_0^inf e^{-2 d sqrt(k0^2 + k_y^2)} dk_y
  const double log_prefactor =
      std::log(hbar * conv.value / (pi * pi * pi)) + std::log(k0 / v) - std::log(config.d);
  const double log_force = log_prefactor + std::log(ky.value) - exponent;

  FrictionResult r;
  r.regime = Regime::PlasmonLine;
  r.diagnostics.suppression_exponent = exponent;
  r.diagnostics.log_force = log_force;
  r.diagnostics.quadrature_rel_err = ky.err_estimate / ky.value;
  if (exponent > kUnderflowExponent) {
    r.diagnostics.validity_flags.emplace_back(kFlagUnderflow);
    return r;
  }
  r.force_per_area = std::exp(log_force);
  r.dissipated_power_per_area = r.force_per_area * v;
  return r;
}

}  // namespace casimir::friction
