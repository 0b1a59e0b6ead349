#pragma once

// Two-oscillator response function phi(t) and the dissipation spectral
// functions J(omega_v) of the linear, zero-temperature and general regimes.

#include <optional>

#include "casimir/material.hpp"
#include "casimir/numerics.hpp"

namespace casimir::response {

class ThermalState {
 public:
  static ThermalState finite(double temperature_k);
  static ThermalState zero() { return ThermalState(); }

  bool is_zero() const { return temperature_ == 0.0; }
  double temperature() const { return temperature_; }
  /// 1 / (k_B T) in 1/J; throws for the T = 0 state.
  double beta() const;

 private:
  ThermalState() = default;
  double temperature_ = 0.0;
};

/// coth(a) + coth(b) for a, b > 0; equals 2 at T = 0.
double thermal_factor_sum(double a, double b);
/// |coth(a) - coth(b)| = sinh|b - a| / (sinh a sinh b); 0 at T = 0.
double thermal_factor_difference(double a, double b);

struct ResponseCoeffs {
  double omega_minus = 0.0;  // |omega1 - omega2|
  double omega_plus = 0.0;   // omega1 + omega2
  double c_minus = 0.0;
  double c_plus = 0.0;
  /// hbar^2 w1 w2 a1 a2 / (4 sinh(b hbar w1/2) sinh(b hbar w2/2)); 0 at T = 0.
  double h = 0.0;
};

/// C_+- = (H / hbar) sinh(beta hbar omega_+- / 2), evaluated without overflow.
ResponseCoeffs response_coeffs(double omega1, double omega2, double alpha1, double alpha2,
                               const ThermalState& thermal);

/// phi(t) = C_- sin(omega_- t) + C_+ sin(omega_+ t) for t > 0, else 0.
double phi(double t, double omega1, double omega2, double alpha1, double alpha2,
           const ThermalState& thermal);

struct Estimate {
  double value = 0.0;
  double err_estimate = 0.0;
};

/// H0 = (pi beta hbar^2 / 2) int m^4 alpha_I1 alpha_I2 / sinh^2(beta m / 2) d omega.
/// DrudeSmallM pairs use the closed form (2 pi hbar / beta^2) D1 D2 pi^2/3.
Estimate h0(const material::SpectralDensity& s1, const material::SpectralDensity& s2,
            const ThermalState& thermal, const numerics::QuadratureSpec& spec);
/// Same with the quadrature forced for DrudeSmallM input.
Estimate h0_quadrature(const material::SpectralDensity& s1, const material::SpectralDensity& s2,
                       const ThermalState& thermal, const numerics::QuadratureSpec& spec);

/// J = 2 tau omega_v^2 H0 (linear regime, finite T).
Estimate j_linear(double omega_v, const material::SpectralDensity& s1,
                  const material::SpectralDensity& s2, const ThermalState& thermal, double tau,
                  const numerics::QuadratureSpec& spec);
Estimate j_linear(double omega_v, const material::SpectralDensity& spectrum,
                  const ThermalState& thermal, double tau, const numerics::QuadratureSpec& spec);

/// J = 2 pi tau |w| hbar^3 int_0^|w| w1 w2 m1 m2 alpha_I1 alpha_I2 d w1, w2 = |w| - w1.
/// Two DrudeSmallM spectra give (pi/3) tau hbar^3 D1 D2 w^4 exactly. Throws
/// SpectrumCutoffExceeded when hbar |w| passes a spectrum's validity cutoff.
Estimate j_zero_t(double omega_v, const material::SpectralDensity& s1,
                  const material::SpectralDensity& s2, double tau,
                  const numerics::QuadratureSpec& spec);

/// Im R1 (x) Im R2 convolution over [0, |omega_v|]. For two line spectra the
/// result is `weight * delta(|omega_v| - support)`, kept symbolic.
struct SpectralConvolution {
  enum class Kind { Regular, Delta };
  Kind kind = Kind::Regular;
  double value = 0.0;  // Regular: integral value; Delta: weight
  double err_estimate = 0.0;
  double support = 0.0;  // Delta only
};

SpectralConvolution j_general_convolution(double omega_v, const material::MaterialModel& r1,
                                          const material::MaterialModel& r2,
                                          const numerics::QuadratureSpec& spec);

/// Thermal dissipation kernel K(W), normalised so that K equals the plain
/// Im R convolution at T = 0:
///   K = 1/2 int_0^W ImR1(w1) ImR2(W - w1) [coth a1 + coth a2] d w1
///     + 1/2 int_0^inf [ImR1(w) ImR2(w + W) + ImR2(w) ImR1(w + W)] [coth a(w) - coth a(w + W)] d w
/// with a(w) = beta hbar w / 2. The first term is the omega_+ channel, the
/// second the omega_- channel.
struct ThermalKernel {
  Estimate sum_channel;
  Estimate difference_channel;
  double total() const { return sum_channel.value + difference_channel.value; }
};

ThermalKernel dissipation_kernel(double omega_v, const material::MaterialModel& r1,
                                 const material::MaterialModel& r2, const ThermalState& thermal,
                                 const numerics::QuadratureSpec& spec);

}  // namespace casimir::response
