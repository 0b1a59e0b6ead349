#pragma once

// Adaptive Gauss-Kronrod quadrature, physical constants and unit conversions.
//
// Everything inside the library is strict SI (m, s, K, J, N/m^2). Conversions
// from eV / nm happen only at the command-line boundary through the helpers
// below.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <type_traits>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir::numerics {

namespace constants {
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double k_B = 1.380649e-23;      // J / K
inline constexpr double eV = 1.602176634e-19;    // J
inline constexpr double nm = 1e-9;               // m
inline constexpr double pi = std::numbers::pi;
}  // namespace constants

/// Photon energy in eV -> angular frequency in rad/s.
inline double ev_to_rad_per_s(double energy_ev) {
  return energy_ev * constants::eV / constants::hbar;
}
inline double rad_per_s_to_ev(double omega) {
  return omega * constants::hbar / constants::eV;
}
inline double nm_to_m(double length_nm) { return length_nm * constants::nm; }
/// beta = 1 / (k_B T), in 1/J.
inline double beta_from_kelvin(double temperature_k) {
  return 1.0 / (constants::k_B * temperature_k);
}

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  int max_subdivisions = 2000;
  // Length scale of the exponential tail for semi-infinite domains.
  double semi_infinite_decay_scale = 1.0;

  /// Throws DomainError when a field is outside its valid range.
  void validate(bool semi_infinite) const;

  QuadratureSpec with_rel_tol(double tol) const {
    QuadratureSpec s = *this;
    s.rel_tol = tol;
    return s;
  }
  QuadratureSpec with_decay_scale(double scale) const {
    QuadratureSpec s = *this;
    s.semi_infinite_decay_scale = scale;
    return s;
  }
};

/// Default settings for one-dimensional integrals.
QuadratureSpec default_spec();
/// Default settings for each level of a nested 2D/3D integral.
QuadratureSpec default_nested_spec();
/// rel_tol taken from CASIMIR_QUAD_RTOL when set, otherwise `fallback`.
double rel_tol_from_env(double fallback);

template <class T>
struct QuadratureResult {
  T value{};
  double err_estimate = 0.0;
  int subdivisions = 0;
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule; index 0 is the centre.
inline constexpr std::array<double, 11> kKronrodNodes = {
    0.00000000000000000e+00, 1.48874338981631211e-01, 2.94392862701460198e-01,
    4.33395394129247191e-01, 5.62757134668604683e-01, 6.79409568299024406e-01,
    7.80817726586416897e-01, 8.65063366688984511e-01, 9.30157491355708226e-01,
    9.73906528517171720e-01, 9.95657163025808081e-01};
inline constexpr std::array<double, 11> kKronrodWeights = {
    1.49445554002916906e-01, 1.47739104901338491e-01, 1.42775938577060081e-01,
    1.34709217311473326e-01, 1.23491976262065851e-01, 1.09387158802297642e-01,
    9.31254545836976055e-02, 7.50396748109199528e-02, 5.47558965743519960e-02,
    3.25581623079647275e-02, 1.16946388673718743e-02};
// Gauss weights for the odd Kronrod nodes (1, 3, 5, 7, 9).
inline constexpr std::array<double, 5> kGaussWeights = {
    2.95524224714752870e-01, 2.69266719309996355e-01, 2.19086362515982044e-01,
    1.49451349150580593e-01, 6.66713443086881376e-02};

template <class T>
struct Panel {
  double a;
  double b;
  T value;
  double error;
  double magnitude;  // integral of |f|, for the round-off floor
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class T, class F>
Panel<T> kronrod_panel(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T f0 = f(centre);
  T kronrod = kKronrodWeights[0] * f0;
  T gauss{};
  double magnitude = kKronrodWeights[0] * std::abs(f0);
  for (std::size_t i = 1; i < kKronrodNodes.size(); ++i) {
    const double dx = half * kKronrodNodes[i];
    const T lo = f(centre - dx);
    const T hi = f(centre + dx);
    kronrod += kKronrodWeights[i] * (lo + hi);
    magnitude += kKronrodWeights[i] * (std::abs(lo) + std::abs(hi));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (lo + hi);
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half),
          magnitude * std::abs(half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (10/21) quadrature of f over [a, b].
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |value|). Nodes never touch
/// the endpoints, so integrable endpoint singularities are tolerated.
/// `f` may return double or std::complex<double>.
template <class F>
auto integrate_finite(F&& f, double a, double b, const QuadratureSpec& spec)
    -> QuadratureResult<std::decay_t<decltype(f(a))>> {
  using T = std::decay_t<decltype(f(a))>;
  spec.validate(false);
  if (!(a <= b)) throw DomainError("integrate_finite: requires a <= b");
  if (a == b) return {T{}, 0.0, 0};

  std::priority_queue<detail::Panel<T>> panels;
  auto first = detail::kronrod_panel<T>(f, a, b);
  T total = first.value;
  double total_err = first.error;
  double total_mag = first.magnitude;
  panels.push(first);
  int subdivisions = 0;

  auto converged = [&] {
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * total_mag;
    return total_err <= tol || total_err <= floor;
  };

  while (!converged()) {
    if (subdivisions >= spec.max_subdivisions) {
      throw NonConvergence("integrate_finite: subdivision limit reached on [" +
                               std::to_string(a) + ", " + std::to_string(b) + "]",
                           std::abs(total), total_err);
    }
    auto worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel cannot be split further in double precision; accept it.
      total_err -= worst.error;
      worst.error = 0.0;
      panels.push(worst);
      continue;
    }
    auto left = detail::kronrod_panel<T>(f, worst.a, mid);
    auto right = detail::kronrod_panel<T>(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_mag += left.magnitude + right.magnitude - worst.magnitude;
    panels.push(left);
    panels.push(right);
    ++subdivisions;
  }
  // Re-sum to shed the drift of the running updates.
  T sum{};
  double err = 0.0;
  while (!panels.empty()) {
    sum += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  return {sum, err, subdivisions};
}

/// Integral of f over [a, inf) through x = a + s t / (1 - t), t in [0, 1),
/// with s = spec.semi_infinite_decay_scale. The map is exact for tails of
/// the form exp(-x / s).
template <class F>
auto integrate_semi_infinite(F&& f, double a, const QuadratureSpec& spec)
    -> QuadratureResult<std::decay_t<decltype(f(a))>> {
  using T = std::decay_t<decltype(f(a))>;
  spec.validate(true);
  const double s = spec.semi_infinite_decay_scale;
  auto mapped = [&](double t) -> T {
    const double one_minus = 1.0 - t;
    const double x = a + s * t / one_minus;
    if (!std::isfinite(x)) return T{};
    const T y = f(x);
    return y * (s / (one_minus * one_minus));
  };
  return integrate_finite(mapped, 0.0, 1.0, spec);
}

/// Least-squares fit y ~ sum_j c_j * basis_j(x); returns c.
std::vector<double> least_squares(const std::vector<std::vector<double>>& columns,
                                  const std::vector<double>& y);
/// Slope of the straight-line fit of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace casimir::numerics
