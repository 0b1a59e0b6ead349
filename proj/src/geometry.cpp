#include "casimir/geometry.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir::geometry {

namespace {
using numerics::constants::pi;
}

void PlateConfig::validate() const {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("PlateConfig: gap d must be > 0");
  if (!(rho1 > 0.0) || !(rho2 > 0.0)) throw DomainError("PlateConfig: densities must be > 0");
}

double psi_hat(double z0, double q) {
  if (!(q > 0.0)) throw DomainError("psi_hat: q must be > 0");
  return 2.0 * pi * std::exp(-q * std::abs(z0)) / q;
}

double g_hat(double z0, double q) {
  const double contraction = 2.0 * q * q;
  const double psi = psi_hat(z0, q);
  return contraction * contraction * psi * psi;
}

double g_hat_z_integrated(double q, double d) {
  if (!(q >= 0.0)) throw DomainError("g_hat_z_integrated: q must be >= 0");
  if (!(d > 0.0)) throw DomainError("g_hat_z_integrated: d must be > 0");
  return 4.0 * pi * pi * std::exp(-2.0 * q * d);
}

double angular_average_cos_power(int n) {
  if (n < 0 || n % 2 != 0) throw DomainError("angular_average_cos_power: n must be even and >= 0");
  double value = 1.0;
  for (int k = n; k > 0; k -= 2) value *= static_cast<double>(k - 1) / static_cast<double>(k);
  return value;
}

double k_moment_general(int power, const PlateConfig& config) {
  config.validate();
  const double avg = angular_average_cos_power(power);
  const double decay = 2.0 * config.d;
  return 2.0 * pi * config.rho1 * config.rho2 * avg * std::tgamma(power + 2.0) /
         std::pow(decay, power + 2);
}

double k_moment(int power, const PlateConfig& config, MomentMethod method,
                const numerics::QuadratureSpec& spec) {
  config.validate();
  if (power != 2 && power != 4) throw DomainError("k_moment: power must be 2 or 4");
  if (power == 4 && config.rho1 != config.rho2)
    throw UnequalDensities("k_moment: G_P assumes rho1 == rho2");

  if (method == MomentMethod::ClosedForm) {
    const double d = config.d;
    if (power == 2) return 3.0 * pi / (8.0 * std::pow(d, 4)) * config.rho1 * config.rho2;
    return 45.0 * pi / (32.0 * std::pow(d, 6)) * config.rho1 * config.rho2;
  }

  // q = s / d keeps the integrand O(1) for any gap.
  const double avg = angular_average_cos_power(power);
  auto integrand = [&](double s) {
    const double q = s / config.d;
    return avg * std::pow(q, power) * g_hat_z_integrated(q, config.d) * 2.0 * pi * q;
  };
  const auto r = numerics::integrate_semi_infinite(integrand, 0.0, spec.with_decay_scale(0.5));
  return config.rho1 * config.rho2 / (4.0 * pi * pi) * r.value / config.d;
}

}  // namespace casimir::geometry
