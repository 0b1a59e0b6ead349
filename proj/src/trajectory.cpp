#include "casimir/trajectory.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir::trajectory {

namespace {

using numerics::constants::pi;

// |x| tau below this uses the series of sin(x tau) / x.
constexpr double kRemovableThreshold = 1e-8;

// sin(x tau) / x with its limit tau at x = 0.
double sinc_tau(double x, double tau) {
  if (std::abs(x) * tau < kRemovableThreshold) return tau * (1.0 - (x * tau) * (x * tau) / 6.0);
  return std::sin(x * tau) / x;
}

}  // namespace

void LoopTrajectory::validate() const {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("LoopTrajectory: v must be > 0");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("LoopTrajectory: tau must be > 0");
  if (!(alpha > 0.0)) throw DomainError("LoopTrajectory: alpha must be > 0");
}

double LoopTrajectory::half_support() const {
  if (infinite_alpha()) throw DomainError("LoopTrajectory: support is unbounded for alpha = inf");
  return (alpha + 1.0) * tau;
}

double loop_position(double t, const LoopTrajectory& traj) {
  traj.validate();
  const double edge = traj.half_support();
  if (t <= -edge || t >= edge) return 0.0;
  if (t < -traj.tau) return -traj.tau - (t + traj.tau) / traj.alpha;
  if (t <= traj.tau) return t;
  return traj.tau - (t - traj.tau) / traj.alpha;
}

complex qhat_closed_form(double omega, double omega_v, const LoopTrajectory& traj) {
  traj.validate();
  if (omega == 0.0) throw DomainError("qhat_closed_form: omega = 0 is excluded");
  if (omega_v == 0.0) return 0.0;
  const double tau = traj.tau;
  const double window = 2.0 * omega_v * sinc_tau(omega - omega_v, tau);
  if (traj.infinite_alpha()) return window / omega;

  const double alpha = traj.alpha;
  const double shifted = omega + omega_v / alpha;
  if (shifted == 0.0) throw DomainError("qhat_closed_form: omega = -omega_v/alpha is excluded");
  const double inner = (1.0 + 1.0 / alpha) * window / shifted;
  const double drift = 2.0 * (omega_v / alpha) * std::sin(omega * (1.0 + alpha) * tau) / (shifted * omega);
  return inner - drift;
}

complex qhat_numeric(double omega, double omega_v, const LoopTrajectory& traj,
                     const numerics::QuadratureSpec& spec) {
  traj.validate();
  if (traj.infinite_alpha()) throw DomainError("qhat_numeric: requires finite alpha");
  if (omega_v == 0.0) return 0.0;
  auto integrand = [&](double t) {
    const double q = loop_position(t, traj);
    return (std::polar(1.0, omega_v * q) - 1.0) * std::polar(1.0, -omega * t);
  };
  const double edge = traj.half_support();
  // The kinks at +-tau split the support into three smooth pieces.
  complex total = 0.0;
  const double breaks[] = {-edge, -traj.tau, traj.tau, edge};
  for (int i = 0; i < 3; ++i)
    total += numerics::integrate_finite(integrand, breaks[i], breaks[i + 1], spec).value;
  return total;
}

double finite_tau_kernel(double omega, double omega_v, const LoopTrajectory& traj) {
  const complex forward = qhat_closed_form(omega, omega_v, traj);
  const complex backward = qhat_closed_form(omega, -omega_v, traj);
  return 0.25 * omega * (std::norm(forward) + std::norm(backward));
}

DeltaKernel::DeltaKernel(double omega_v, double tau) : omega_v_(omega_v), tau_(tau) {
  if (!(tau > 0.0)) throw DomainError("delta_kernel_I: tau must be > 0");
}

double DeltaKernel::prefactor(double omega) const {
  if (!(omega > 0.0)) throw DomainError("delta_kernel_I: omega must be > 0");
  return pi * tau_ * omega_v_ * omega_v_ / omega;
}

DeltaKernel delta_kernel_I(double omega_v, double tau) { return DeltaKernel(omega_v, tau); }

std::vector<DeltaConvergenceRow> delta_convergence_study(double omega_v, double width,
                                                          double tau0, int doublings,
                                                          const numerics::QuadratureSpec& spec) {
  if (!(width > 0.0)) throw DomainError("delta_convergence_study: width must be > 0");
  if (!(tau0 > 0.0)) throw DomainError("delta_convergence_study: tau must be > 0");
  if (doublings < 0) throw DomainError("delta_convergence_study: doublings must be >= 0");

  const double w = std::abs(omega_v);
  auto gaussian = [&](double omega) {
    const double z = (omega - w) / width;
    return std::exp(-0.5 * z * z);
  };
  // The alpha = inf kernel grows like 1/omega at the origin; the window stops short of it.
  const double lo = std::max(w - 10.0 * width, 1e-6 * w);
  const double hi = w + 10.0 * width;

  std::vector<DeltaConvergenceRow> rows;
  double tau = tau0;
  for (int k = 0; k <= doublings; ++k, tau *= 2.0) {
    DeltaConvergenceRow row;
    row.tau = tau;
    const LoopTrajectory traj{1.0, tau, std::numeric_limits<double>::infinity()};
    row.prediction = delta_kernel_I(omega_v, tau).integrate_positive(gaussian);
    if (omega_v != 0.0) {
      auto integrand = [&](double omega) {
        const double g = gaussian(omega);
        if (omega <= 0.0 || g == 0.0) return 0.0;
        return finite_tau_kernel(omega, omega_v, traj) * g;
      };
      // Panels of a few oscillation periods keep the adaptive driver honest.
      const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) * tau / pi / 4.0)));
      const double step = (hi - lo) / panels;
      for (int p = 0; p < panels; ++p)
        row.integral += numerics::integrate_finite(integrand, lo + p * step, lo + (p + 1) * step, spec).value;
      row.rel_error = std::abs(row.integral - row.prediction) / row.prediction;
    }
    if (!rows.empty() && row.rel_error > 0.0) row.error_ratio = rows.back().rel_error / row.rel_error;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace casimir::trajectory
