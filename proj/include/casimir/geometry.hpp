#pragma once

// In-plane Fourier kernels of the dipole-dipole interaction between two
// half-spaces separated by a vacuum gap, and their k-space moments.

#include "casimir/numerics.hpp"

namespace casimir::geometry {

struct PlateConfig {
  double d = 0.0;     // gap, m
  double rho1 = 0.0;  // number density of the moving plate, 1/m^3
  double rho2 = 0.0;  // number density of the plate at rest, 1/m^3

  void validate() const;
};

/// 2 pi exp(-q |z0|) / q: the Coulomb kernel 1/r transformed in x and y.
double psi_hat(double z0, double q);

/// (2 q^2)^2 psi_hat^2. The factor 2 q^2 is the contraction -i k_j i k_j
/// with i k_z following the sign of z, not the naive k_perp^2 - q^2 = 0.
double g_hat(double z0, double q);

/// Double z-integral of g_hat over z1 > d, z2 < 0: (2 pi)^2 exp(-2 q d).
double g_hat_z_integrated(double q, double d);

enum class MomentMethod { ClosedForm, Quadrature };

/// Angular average of cos^n over the circle: (n-1)!! / n!! for even n.
double angular_average_cos_power(int n);

/// rho1 rho2 / (2 pi)^2 int <k_x^n> g_hat(q) 2 pi q dq for even n >= 0.
/// Closed form 2 pi rho1 rho2 <cos^n> Gamma(n + 2) / (2 d)^(n + 2).
double k_moment_general(int power, const PlateConfig& config);

/// power 2: G = 3 pi / (8 d^4) rho1 rho2.
/// power 4: G_P = 45 pi / (32 d^6) rho^2 (requires rho1 == rho2).
double k_moment(int power, const PlateConfig& config,
                MomentMethod method = MomentMethod::ClosedForm,
                const numerics::QuadratureSpec& spec = numerics::default_spec());

}  // namespace casimir::geometry
