#pragma once

// Closed-loop sliding motion and its Fourier transform.
//
// The upper plate drifts out slowly with velocity -v/alpha, crosses the
// window (-tau, tau) at velocity v, and drifts back so that q returns to zero
// at t = +-(alpha + 1) tau. q(t) is measured in seconds: the displacement is
// v * q(t).

#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include "casimir/numerics.hpp"

namespace casimir::trajectory {

using complex = std::complex<double>;

struct LoopTrajectory {
  double v = 1.0;    // m/s
  double tau = 1.0;  // s
  double alpha = std::numeric_limits<double>::infinity();

  void validate() const;
  bool infinite_alpha() const { return std::isinf(alpha); }
  /// Half-length (alpha + 1) tau of the support; requires finite alpha.
  double half_support() const;
};

/// q(t) of the closed loop; zero outside [-(alpha+1) tau, (alpha+1) tau].
double loop_position(double t, const LoopTrajectory& traj);

/// Q(omega, -omega_v) = integral of (exp(i omega_v q(t)) - 1) exp(-i omega t) dt.
///
/// Finite alpha:
///   2 [ (1 + 1/alpha) omega_v sin((omega - omega_v) tau) / ((omega + omega_v/alpha)(omega - omega_v))
///       - (omega_v/alpha) sin(omega (1 + alpha) tau) / ((omega + omega_v/alpha) omega) ]
/// alpha = inf:
///   2 omega_v sin((omega - omega_v) tau) / (omega (omega - omega_v)).
/// The removable point omega = omega_v is evaluated by its limit.
complex qhat_closed_form(double omega, double omega_v, const LoopTrajectory& traj);

/// Direct quadrature of the defining integral (finite alpha only).
complex qhat_numeric(double omega, double omega_v, const LoopTrajectory& traj,
                     const numerics::QuadratureSpec& spec);

/// Finite-tau dissipation kernel (omega/4) sum_{n=+-1} Q(-omega, n w) Q(omega, -n w)
/// = (omega/4) (|Q(omega, -w)|^2 + |Q(omega, w)|^2).
double finite_tau_kernel(double omega, double omega_v, const LoopTrajectory& traj);

/// tau -> inf limit pi tau (omega_v^2 / omega) [delta(omega - omega_v) + delta(omega + omega_v)],
/// kept symbolic.
class DeltaKernel {
 public:
  DeltaKernel(double omega_v, double tau);

  double omega_v() const { return omega_v_; }
  double tau() const { return tau_; }
  /// pi tau omega_v^2 / omega.
  double prefactor(double omega) const;
  /// Support points {-omega_v, +omega_v}.
  std::pair<double, double> support() const { return {-omega_v_, omega_v_}; }
  bool is_zero() const { return omega_v_ == 0.0; }

  /// Integral of I(omega) f(omega) over omega > 0, i.e. pi tau |omega_v| f(|omega_v|).
  template <class F>
  double integrate_positive(F&& f) const {
    if (is_zero()) return 0.0;
    const double w = std::abs(omega_v_);
    return prefactor(w) * f(w);
  }

 private:
  double omega_v_;
  double tau_;
};

DeltaKernel delta_kernel_I(double omega_v, double tau);

/// One row of the delta-sequence convergence study.
struct DeltaConvergenceRow {
  double tau = 0.0;
  double integral = 0.0;    // integral of finite_tau_kernel * gaussian over omega > 0
  double prediction = 0.0;  // pi tau omega_v gaussian(omega_v)
  double rel_error = 0.0;   // |integral - prediction| / prediction
  double error_ratio = 0.0; // rel_error(previous tau) / rel_error(this tau); 0 on the first row
};

/// Integrates the alpha = inf finite-tau kernel against a normalised-height
/// Gaussian of width `width` centred at |omega_v| (window +-10 width) for
/// tau, 2 tau, 4 tau, ...
std::vector<DeltaConvergenceRow> delta_convergence_study(double omega_v, double width,
                                                          double tau0, int doublings,
                                                          const numerics::QuadratureSpec& spec);

}  // namespace casimir::trajectory
