#include "casimir/response.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "casimir/errors.hpp"

namespace casimir::response {

namespace {

using material::SpectralDensity;
using numerics::constants::hbar;
using numerics::constants::pi;

// 1 - exp(-2x) for x > 0.
double one_minus_exp2(double x) { return -std::expm1(-2.0 * x); }

// coth a - coth (a + gap) for gap >= 0, without forming the difference.
double coth_gap(double a, double gap) {
  return 2.0 * one_minus_exp2(gap) * std::exp(-2.0 * a) / (one_minus_exp2(a) * one_minus_exp2(a + gap));
}

bool both_small_m(const SpectralDensity& s1, const SpectralDensity& s2) {
  return s1.kind() == SpectralDensity::Kind::DrudeSmallM &&
         s2.kind() == SpectralDensity::Kind::DrudeSmallM;
}

void reject_lines(const SpectralDensity& s, const char* op) {
  if (s.kind() == SpectralDensity::Kind::DeltaLines)
    throw DomainError(std::string(op) + ": delta-line spectra need j_general_convolution");
}

}  // namespace

ThermalState ThermalState::finite(double temperature_k) {
  if (!(temperature_k > 0.0) || !std::isfinite(temperature_k))
    throw DomainError("ThermalState: temperature must be > 0 (use ThermalState::zero())");
  ThermalState s;
  s.temperature_ = temperature_k;
  return s;
}

double ThermalState::beta() const {
  if (is_zero()) throw DomainError("ThermalState: beta is infinite at T = 0");
  return numerics::beta_from_kelvin(temperature_);
}

double thermal_factor_sum(double a, double b) {
  return 2.0 * one_minus_exp2(a + b) / (one_minus_exp2(a) * one_minus_exp2(b));
}

double thermal_factor_difference(double a, double b) {
  if (a > b) std::swap(a, b);
  return coth_gap(a, b - a);
}

ResponseCoeffs response_coeffs(double omega1, double omega2, double alpha1, double alpha2,
                               const ThermalState& thermal) {
  if (!(omega1 > 0.0) || !(omega2 > 0.0)) throw DomainError("response_coeffs: omegas must be > 0");
  if (!(alpha1 > 0.0) || !(alpha2 > 0.0)) throw DomainError("response_coeffs: alphas must be > 0");
  ResponseCoeffs c;
  c.omega_minus = std::abs(omega1 - omega2);
  c.omega_plus = omega1 + omega2;
  // D / 2 with the dipole strength D = hbar w1 w2 a1 a2 / 2.
  const double half_dipole = 0.25 * hbar * omega1 * omega2 * alpha1 * alpha2;
  if (thermal.is_zero()) {
    c.c_plus = 2.0 * half_dipole;
    c.c_minus = 0.0;
    c.h = 0.0;
    return c;
  }
  const double a = 0.5 * thermal.beta() * hbar * omega1;
  const double b = 0.5 * thermal.beta() * hbar * omega2;
  c.c_plus = half_dipole * thermal_factor_sum(a, b);
  c.c_minus = half_dipole * thermal_factor_difference(a, b);
  // 1 / (sinh a sinh b) = 4 exp(-a - b) / ((1 - e^{-2a})(1 - e^{-2b})).
  c.h = hbar * half_dipole * 4.0 * std::exp(-a - b) / (one_minus_exp2(a) * one_minus_exp2(b));
  return c;
}

double phi(double t, double omega1, double omega2, double alpha1, double alpha2,
           const ThermalState& thermal) {
  if (t <= 0.0) return 0.0;
  const auto c = response_coeffs(omega1, omega2, alpha1, alpha2, thermal);
  return c.c_minus * std::sin(c.omega_minus * t) + c.c_plus * std::sin(c.omega_plus * t);
}

Estimate h0_quadrature(const SpectralDensity& s1, const SpectralDensity& s2,
                       const ThermalState& thermal, const numerics::QuadratureSpec& spec) {
  reject_lines(s1, "h0");
  reject_lines(s2, "h0");
  if (thermal.is_zero()) return {0.0, 0.0};
  const double beta = thermal.beta();
  // x = beta m: H0 = 2 pi hbar int g1(x/beta) g2(x/beta) e^{-x} / (1 - e^{-x})^2 dx.
  auto integrand = [&](double x) {
    if (x <= 0.0) return 0.0;
    const double m = x / beta;
    const double denom = std::expm1(-x);
    return s1(m) * s2(m) * std::exp(-x) / (denom * denom);
  };
  const auto r = numerics::integrate_semi_infinite(integrand, 0.0, spec.with_decay_scale(1.0));
  const double scale = 2.0 * pi * hbar;
  return {scale * r.value, scale * r.err_estimate};
}

Estimate h0(const SpectralDensity& s1, const SpectralDensity& s2, const ThermalState& thermal,
            const numerics::QuadratureSpec& spec) {
  if (thermal.is_zero()) return {0.0, 0.0};
  if (both_small_m(s1, s2)) {
    const double beta = thermal.beta();
    const double value = 2.0 * pi * hbar / (beta * beta) * s1.small_m()->slope *
                         s2.small_m()->slope * (pi * pi / 3.0);
    return {value, 0.0};
  }
  return h0_quadrature(s1, s2, thermal, spec);
}

Estimate j_linear(double omega_v, const SpectralDensity& s1, const SpectralDensity& s2,
                  const ThermalState& thermal, double tau, const numerics::QuadratureSpec& spec) {
  if (thermal.is_zero()) throw DomainError("j_linear: requires finite temperature");
  if (!(tau > 0.0)) throw DomainError("j_linear: tau must be > 0");
  if (omega_v == 0.0) return {0.0, 0.0};
  const auto h = h0(s1, s2, thermal, spec);
  const double scale = 2.0 * tau * omega_v * omega_v;
  return {scale * h.value, scale * h.err_estimate};
}

Estimate j_linear(double omega_v, const SpectralDensity& spectrum, const ThermalState& thermal,
                  double tau, const numerics::QuadratureSpec& spec) {
  return j_linear(omega_v, spectrum, spectrum, thermal, tau, spec);
}

Estimate j_zero_t(double omega_v, const SpectralDensity& s1, const SpectralDensity& s2,
                  double tau, const numerics::QuadratureSpec& spec) {
  reject_lines(s1, "j_zero_t");
  reject_lines(s2, "j_zero_t");
  if (!(tau > 0.0)) throw DomainError("j_zero_t: tau must be > 0");
  const double w = std::abs(omega_v);
  if (w == 0.0) return {0.0, 0.0};
  const double m_top = hbar * w;
  if (m_top > s1.m_max() || m_top > s2.m_max())
    throw SpectrumCutoffExceeded("j_zero_t: hbar |omega_v| exceeds the spectrum validity cutoff");

  if (both_small_m(s1, s2)) {
    const double value = pi / 3.0 * tau * hbar * hbar * hbar * s1.small_m()->slope *
                         s2.small_m()->slope * std::pow(w, 4);
    return {value, 0.0};
  }
  // u = omega1 / |omega_v| in [0, 1].
  auto integrand = [&](double u) { return s1(m_top * u) * s2(m_top * (1.0 - u)); };
  const auto r = numerics::integrate_finite(integrand, 0.0, 1.0, spec);
  const double scale = 2.0 * pi * tau * w * hbar * w;
  return {scale * r.value, scale * r.err_estimate};
}

SpectralConvolution j_general_convolution(double omega_v, const material::MaterialModel& r1,
                                          const material::MaterialModel& r2,
                                          const numerics::QuadratureSpec& spec) {
  using material::PlasmonLine;
  const double w = std::abs(omega_v);
  const auto* line1 = std::get_if<PlasmonLine>(&r1);
  const auto* line2 = std::get_if<PlasmonLine>(&r2);

  SpectralConvolution out;
  if (line1 && line2) {
    out.kind = SpectralConvolution::Kind::Delta;
    out.value = material::plasmon_line_weight(line1->omega_sp) *
                material::plasmon_line_weight(line2->omega_sp);
    out.support = line1->omega_sp + line2->omega_sp;
    return out;
  }
  if (w == 0.0) return out;
  if (line1 || line2) {
    // -w_line delta(w1 - w_line) against the continuous factor.
    const auto* line = line1 ? line1 : line2;
    const auto& other = line1 ? r2 : r1;
    const double rest = w - line->omega_sp;
    if (rest > 0.0)
      out.value = -material::plasmon_line_weight(line->omega_sp) * material::im_response(other, rest);
    return out;
  }
  auto integrand = [&](double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    return material::im_response(r1, w * u) * material::im_response(r2, w * (1.0 - u));
  };
  const auto r = numerics::integrate_finite(integrand, 0.0, 1.0, spec);
  out.value = w * r.value;
  out.err_estimate = w * r.err_estimate;
  return out;
}

ThermalKernel dissipation_kernel(double omega_v, const material::MaterialModel& r1,
                                 const material::MaterialModel& r2, const ThermalState& thermal,
                                 const numerics::QuadratureSpec& spec) {
  if (material::is_line_spectrum(r1) || material::is_line_spectrum(r2))
    throw DomainError("dissipation_kernel: line spectra are handled by force_plasmon");
  ThermalKernel k;
  const double w = std::abs(omega_v);
  if (w == 0.0) return k;
  if (thermal.is_zero()) {
    const auto conv = j_general_convolution(w, r1, r2, spec);
    k.sum_channel = {conv.value, conv.err_estimate};
    return k;
  }

  const double half_beta_hbar = 0.5 * thermal.beta() * hbar;
  auto sum_integrand = [&](double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    const double w1 = w * u;
    const double w2 = w - w1;
    return material::im_response(r1, w1) * material::im_response(r2, w2) *
           thermal_factor_sum(half_beta_hbar * w1, half_beta_hbar * w2);
  };
  const auto sum = numerics::integrate_finite(sum_integrand, 0.0, 1.0, spec);
  k.sum_channel = {0.5 * w * sum.value, 0.5 * w * sum.err_estimate};

  // x = beta hbar omega; the thermal factor decays as exp(-x).
  const double inv_beta_hbar = 1.0 / (2.0 * half_beta_hbar);
  auto diff_integrand = [&](double x) {
    if (x <= 0.0) return 0.0;
    const double lo = x * inv_beta_hbar;
    const double hi = lo + w;
    const double cross = material::im_response(r1, lo) * material::im_response(r2, hi) +
                         material::im_response(r2, lo) * material::im_response(r1, hi);
    if (cross == 0.0) return 0.0;
    return cross * coth_gap(half_beta_hbar * lo, half_beta_hbar * w);
  };
  const auto diff = numerics::integrate_semi_infinite(diff_integrand, 0.0, spec.with_decay_scale(1.0));
  k.difference_channel = {0.5 * inv_beta_hbar * diff.value, 0.5 * inv_beta_hbar * diff.err_estimate};
  return k;
}

}  // namespace casimir::response
