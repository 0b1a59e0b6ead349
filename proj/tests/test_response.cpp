#include <gtest/gtest.h>

#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/material.hpp"
#include "casimir/response.hpp"

using namespace casimir;
using numerics::constants::hbar;
using numerics::constants::pi;
using response::ThermalState;

namespace {

material::Drude drude_9ev() {
  return {numerics::ev_to_rad_per_s(9.0), numerics::ev_to_rad_per_s(0.035)};
}

double coth(double x) { return 1.0 / std::tanh(x); }

}  // namespace

TEST(Thermal, Factors) {
  for (double a : {1e-3, 0.4, 3.0}) {
    for (double b : {2e-3, 1.1, 7.0}) {
      EXPECT_NEAR(response::thermal_factor_sum(a, b) / (coth(a) + coth(b)), 1.0, 1e-12);
      EXPECT_NEAR(response::thermal_factor_difference(a, b) / std::abs(coth(a) - coth(b)), 1.0, 1e-9);
    }
  }
  EXPECT_NEAR(response::thermal_factor_sum(800.0, 900.0), 2.0, 1e-15);
  EXPECT_EQ(response::thermal_factor_difference(800.0, 900.0), 0.0);
  EXPECT_THROW(ThermalState::zero().beta(), DomainError);
  EXPECT_THROW(ThermalState::finite(-1.0), DomainError);
}

TEST(Coeffs, ZeroTemperatureLimit) {
  const auto c = response::response_coeffs(2.0, 3.0, 0.5, 0.25, ThermalState::zero());
  EXPECT_DOUBLE_EQ(c.c_plus, 0.5 * hbar * 2.0 * 3.0 * 0.5 * 0.25);
  EXPECT_EQ(c.c_minus, 0.0);
  EXPECT_EQ(c.h, 0.0);
  EXPECT_DOUBLE_EQ(c.omega_minus, 1.0);
  EXPECT_DOUBLE_EQ(c.omega_plus, 5.0);
  // Very cold finite T approaches the zero-T coefficients.
  const auto cold = response::response_coeffs(2e14, 3e14, 0.5, 0.25, ThermalState::finite(1e-3));
  EXPECT_NEAR(cold.c_plus / (0.5 * hbar * 6e28 * 0.125), 1.0, 1e-12);
}

TEST(Coeffs, SinhIdentity) {
  const auto th = ThermalState::finite(300.0);
  const double w1 = 3e13, w2 = 5e13;
  const auto c = response::response_coeffs(w1, w2, 1.0, 1.0, th);
  const double half = 0.5 * th.beta() * hbar;
  EXPECT_NEAR(c.c_plus / (c.h / hbar * std::sinh(half * (w1 + w2))), 1.0, 1e-12);
  EXPECT_NEAR(c.c_minus / (c.h / hbar * std::sinh(half * (w2 - w1))), 1.0, 1e-12);
  EXPECT_EQ(response::phi(-1.0, w1, w2, 1.0, 1.0, th), 0.0);
  EXPECT_NEAR(response::phi(1e-14, w1, w2, 1.0, 1.0, th),
              c.c_minus * std::sin(2e13 * 1e-14) + c.c_plus * std::sin(8e13 * 1e-14), 1e-40);
}

TEST(H0, ClosedFormMatchesQuadrature) {
  const auto th = ThermalState::finite(300.0);
  const auto s1 = material::SpectralDensity::drude_small_m({2e20, 1e-19});
  const auto s2 = material::SpectralDensity::drude_small_m({3e20, 1e-19});
  const auto closed = response::h0(s1, s2, th, numerics::default_spec());
  const auto numeric = response::h0_quadrature(s1, s2, th, numerics::default_spec());
  const double beta = th.beta();
  EXPECT_NEAR(closed.value / (2.0 * pi * hbar * 6e40 * (pi * pi / 3.0) / (beta * beta)), 1.0, 1e-14);
  EXPECT_NEAR(numeric.value / closed.value, 1.0, 1e-8);
  const auto j = response::j_linear(1e12, s1, s2, th, 7.0, numerics::default_spec());
  EXPECT_NEAR(j.value / (2.0 * 7.0 * 1e24 * closed.value), 1.0, 1e-14);
  EXPECT_EQ(response::h0(s1, s2, ThermalState::zero(), numerics::default_spec()).value, 0.0);
}

TEST(JZeroT, ClosedFormAndCutoff) {
  const auto s = material::SpectralDensity::drude_small_m({2e20, 1e-19});
  const double w = 1e13, tau = 3.0;
  const auto j = response::j_zero_t(w, s, s, tau, numerics::default_spec());
  EXPECT_NEAR(j.value / (pi / 3.0 * tau * std::pow(hbar, 3) * 4e40 * std::pow(w, 4)), 1.0, 1e-14);
  EXPECT_THROW(response::j_zero_t(2e-19 / hbar, s, s, tau, numerics::default_spec()), SpectrumCutoffExceeded);
}

// Same integral reached through the spectral density and through Im R directly.
TEST(JZeroT, MatchesImRConvolution) {
  const auto d = drude_9ev();
  const double rho = 1e28, tau = 2.0;
  const auto s = material::spectral_density_from_R(d, rho);
  for (double w : {1e12, 1e14, 5e14}) {
    const auto j = response::j_zero_t(w, s, s, tau, numerics::default_spec());
    const auto conv = response::j_general_convolution(w, d, d, numerics::default_spec());
    const double scale = 2.0 * pi * tau * w * hbar / std::pow(2.0 * pi * pi * rho, 2);
    EXPECT_NEAR(j.value / (scale * conv.value), 1.0, 1e-8);
  }
}

TEST(Convolution, LineSpectra) {
  const material::PlasmonLine p{1e16};
  const auto c = response::j_general_convolution(0.0, p, p, numerics::default_spec());
  EXPECT_EQ(c.kind, response::SpectralConvolution::Kind::Delta);
  EXPECT_DOUBLE_EQ(c.support, 2e16);
  EXPECT_DOUBLE_EQ(c.value, std::pow(pi / 2.0 * 1e16, 2));
}

// mpmath oracle: int_0^W ImR(x) ImR(W - x) dx at W = 1e14, 9 eV / 35 meV Drude.
TEST(Kernel, ZeroTemperatureOracle) {
  const material::MaterialModel m = drude_9ev();
  const auto k = response::dissipation_kernel(1e14, m, m, ThermalState::zero(), numerics::default_spec());
  EXPECT_NEAR(k.total() / 53933.9311446602535619, 1.0, 1e-9);
  EXPECT_EQ(k.difference_channel.value, 0.0);
}

// mpmath oracle at W = 1e13, T = 300 K for both channels.
TEST(Kernel, FiniteTemperatureOracle) {
  const material::MaterialModel m = drude_9ev();
  const auto k = response::dissipation_kernel(1e13, m, m, ThermalState::finite(300.0),
                                              numerics::default_spec());
  EXPECT_NEAR(k.sum_channel.value / 1271.97110080474496012, 1.0, 1e-8);
  EXPECT_NEAR(k.difference_channel.value / 31640.6493721634826023, 1.0, 1e-8);
}

TEST(Kernel, SmallWIsLinear) {
  const material::MaterialModel m = drude_9ev();
  const auto th = ThermalState::finite(300.0);
  const auto a = response::dissipation_kernel(1.0, m, m, th, numerics::default_nested_spec());
  const auto b = response::dissipation_kernel(100.0, m, m, th, numerics::default_nested_spec());
  EXPECT_NEAR(b.total() / a.total(), 100.0, 1e-3);
}
