// Acceptance checks 1-10. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "casimir/compare.hpp"
#include "casimir/friction.hpp"
#include "casimir/geometry.hpp"
#include "casimir/material.hpp"
#include "casimir/numerics.hpp"
#include "casimir/response.hpp"
#include "casimir/trajectory.hpp"

using namespace casimir;
using numerics::constants::hbar;
using numerics::constants::k_B;
using numerics::constants::pi;
using response::ThermalState;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::function<Outcome()> body;
};

material::Drude drude(double wp_ev, double nu_ev) {
  return {numerics::ev_to_rad_per_s(wp_ev), numerics::ev_to_rad_per_s(nu_ev)};
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  return numerics::fit_slope(lx, ly);
}

std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(a * std::pow(b / a, static_cast<double>(i) / (n - 1)));
  return v;
}

// 1. int_0^inf x^2 e^-x / (1 - e^-x)^2 dx = pi^2 / 3.
Outcome bose_constant() {
  auto f = [](double x) { return x * x * std::exp(-x) / std::pow(-std::expm1(-x), 2); };
  const auto direct = numerics::integrate_semi_infinite(f, 0.0, numerics::default_spec());
  const auto th = ThermalState::finite(300.0);
  const auto s = material::SpectralDensity::drude_small_m({1e20, 1e-19});
  const double via_h0 = response::h0_quadrature(s, s, th, numerics::default_spec()).value /
                        (2.0 * pi * hbar * 1e40 / (th.beta() * th.beta()));
  const double target = pi * pi / 3.0;
  const double e1 = rel(direct.value, target), e2 = rel(via_h0, target);
  return {e1 < 1e-10 && e2 < 1e-10, "rel err direct " + sci(e1) + ", through H0 " + sci(e2)};
}

// 2. G and G_P by quadrature against closed forms.
Outcome moments() {
  double worst = 0.0;
  for (double d : {1e-9, 1e-8, 1e-6}) {
    const geometry::PlateConfig c{d, 1e28, 1e28};
    const double g = 3.0 * pi / (8.0 * std::pow(d, 4)) * c.rho1 * c.rho2;
    const double gp = 45.0 * pi / (32.0 * std::pow(d, 6)) * c.rho1 * c.rho1;
    worst = std::max(worst, rel(geometry::k_moment(2, c, geometry::MomentMethod::Quadrature), g));
    worst = std::max(worst, rel(geometry::k_moment(4, c, geometry::MomentMethod::Quadrature), gp));
  }
  return {worst < 1e-8, "max rel err " + sci(worst)};
}

// 3. F_linear / F_zeroT = (1/12)(64 pi^2 / 5)(d / (beta hbar v))^2 on random inputs.
Outcome ratio() {
  std::mt19937_64 rng(20240611);
  auto uniform_log = [&](double lo, double hi) {
    return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
  };
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto m = drude(uniform_log(1.0, 20.0), uniform_log(1e-3, 0.5));
    const double d = uniform_log(1e-9, 1e-6);
    const double rho = uniform_log(1e26, 1e30);
    const double t = uniform_log(1.0, 1000.0);
    const double v = uniform_log(1e-4, 1e2);
    const geometry::PlateConfig c{d, rho, rho};
    const auto th = ThermalState::finite(t);
    const double f_lin = friction::force_linear(m, c, th, v).force_per_area;
    const double f_cub = friction::force_zero_t(m, c, v).force_per_area;
    const double x = d / (th.beta() * hbar * v);
    worst = std::max(worst, rel(f_lin / f_cub, (1.0 / 12.0) * (64.0 * pi * pi / 5.0) * x * x));
  }
  return {worst < 1e-12, "max rel err over 20 sets " + sci(worst)};
}

// 4. Pendry : Volokitin-Persson : Barton chain.
Outcome factor_chain() {
  const auto m = drude(9.0, 0.035);
  const geometry::PlateConfig c{1e-8, 1e28, 1e28};
  const double v = 1.0;
  const double f0 = friction::force_zero_t(m, c, v).force_per_area;
  const auto lit = compare::LiteratureParams::from_drude(m, c.d, v);
  const double e_p = rel(f0 / compare::pendry_force(lit).force, 12.0);
  const double e_b = rel(f0, compare::barton_force(lit));
  const double e_vp = rel(f0 / compare::volokitin_persson_force(lit), 2.0);
  const bool ok = e_p < 1e-12 && e_b < 1e-12 && e_vp < 1e-12;
  return {ok, "F/F_P-12 " + sci(e_p) + ", F/F_B-1 " + sci(e_b) + ", F/F_VP-2 " + sci(e_vp)};
}

// 5. General pipeline against both closed forms.
Outcome regime_consistency() {
  const auto m = drude(9.0, 0.035);
  const geometry::PlateConfig c{1e-8, 1e28, 1e28};
  const auto th = ThermalState::finite(300.0);
  double worst_lin = 0.0, worst_cub = 0.0, slowest = 0.0;
  for (double v : {1e-4, 1e-3, 1e-2}) {
    const auto t0 = std::chrono::steady_clock::now();
    const double g = friction::dissipation_general(m, m, c, th, v).force_per_area;
    slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    worst_lin = std::max(worst_lin, rel(g, friction::force_linear(m, c, th, v).force_per_area));
  }
  // hbar v / d = 6.6e-5 eV at v = 1e3 m/s, far below m_max = 0.64 eV.
  for (double v : {1e2, 1e3}) {
    const auto t0 = std::chrono::steady_clock::now();
    const double g = friction::dissipation_general(m, m, c, ThermalState::zero(), v).force_per_area;
    slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    worst_cub = std::max(worst_cub, rel(g, friction::force_zero_t(m, c, v).force_per_area));
  }
  const bool ok = worst_lin < 1e-2 && worst_cub < 1e-2 && slowest < 60.0;
  return {ok, "vs linear " + sci(worst_lin) + ", vs zero-T " + sci(worst_cub) + ", slowest point " +
                  sci(slowest) + " s"};
}

// 6. Velocity exponents.
Outcome scaling() {
  const auto m = drude(9.0, 0.035);
  const geometry::PlateConfig c{1e-8, 1e28, 1e28};
  const auto th = ThermalState::finite(300.0);
  const auto low = logspace(1e-3, 1e-2, 6);
  std::vector<double> f_lin, f_cub;
  for (double v : low) {
    f_lin.push_back(friction::force_linear(m, c, th, v).force_per_area);
    f_cub.push_back(friction::force_zero_t(m, c, v).force_per_area);
  }
  const auto vs = logspace(1e2, 1e3, 6);
  std::vector<double> f_gen;
  for (double v : vs)
    f_gen.push_back(friction::dissipation_general(m, m, c, ThermalState::zero(), v).force_per_area);
  const double p1 = loglog_slope(low, f_lin), p3 = loglog_slope(low, f_cub), pg = loglog_slope(vs, f_gen);
  const bool ok = std::abs(p1 - 1.0) <= 1e-3 && std::abs(p3 - 3.0) <= 1e-3 && std::abs(pg - 3.0) <= 2e-2;
  char buf[160];
  std::snprintf(buf, sizeof buf, "linear %.6f, zero-T %.6f, general %.6f", p1, p3, pg);
  return {ok, buf};
}

// 7. Delta-sequence convergence under tau doubling.
Outcome delta_sequence() {
  const auto rows = trajectory::delta_convergence_study(1.0, 0.1, 50.0, 3, numerics::default_spec());
  bool ok = rows.size() == 4;
  std::string detail = "ratios";
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ok = ok && std::abs(rows[i].error_ratio - 2.0) <= 0.2;
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.4f", rows[i].error_ratio);
    detail += buf;
  }
  return {ok, detail};
}

// 8. Plasmon suppression: d ln F / d(1/v) = -4 omega_sp d.
Outcome plasmon() {
  const auto m = drude(9.0, 0.035);
  const double wsp = m.omega_sp();
  const double d = 1e-10;
  const geometry::PlateConfig c{d, 1e28, 1e28};
  std::vector<double> inv_v, log_inv_v, ln_f, ones;
  for (double x : logspace(5.0, 50.0, 25)) {
    const double v = 4.0 * wsp * d / x;
    const auto r = friction::force_plasmon(wsp, c, v);
    inv_v.push_back(1.0 / v);
    log_inv_v.push_back(std::log(1.0 / v));
    ln_f.push_back(*r.diagnostics.log_force);
    ones.push_back(1.0);
  }
  const double expected = -4.0 * wsp * d;
  const auto coef = numerics::least_squares({ones, log_inv_v, inv_v}, ln_f);
  const double naive = numerics::fit_slope(inv_v, ln_f);
  const double e_fit = rel(coef[2], expected);
  const double v_star = 4.0 * wsp * d;
  const double factor = std::max(v_star / 2.4e6, 2.4e6 / v_star);
  const bool ok = e_fit <= 0.02 && factor <= 2.0;
  return {ok, "fitted slope rel err " + sci(e_fit) + " (naive line " + sci(rel(naive, expected)) +
                  "), v* = " + sci(v_star) + " m/s, factor " + sci(factor) + " from 2.4e6"};
}

// 9. Closed form vs quadrature for Q-hat and for the zero-T convolution.
Outcome oracle_equivalence() {
  const trajectory::LoopTrajectory t{1.0, 4.0, 10.0};
  const auto spec = numerics::default_spec().with_rel_tol(1e-10);
  double worst_q = 0.0;
  for (double w : {-1.9, -0.6, 0.45, 1.2, 2.8})
    for (double wv : {-1.5, -0.3, 0.7, 1.2, 2.0}) {
      const auto a = trajectory::qhat_closed_form(w, wv, t);
      const auto b = trajectory::qhat_numeric(w, wv, t, spec);
      worst_q = std::max(worst_q, std::abs(a - b) / std::abs(b));
    }
  const auto m = drude(9.0, 0.035);
  const double rho = 1e28, tau = 1.0;
  const auto s = material::spectral_density_from_R(m, rho);
  double worst_j = 0.0;
  for (double w : {1e11, 1e13, 1e14, 5e14, 0.9 * s.small_m()->m_max / hbar}) {
    const double j = response::j_zero_t(w, s, s, tau, numerics::default_spec()).value;
    const double conv = response::j_general_convolution(w, m, m, numerics::default_spec()).value;
    const double scale = 2.0 * pi * tau * w * hbar / std::pow(2.0 * pi * pi * rho, 2);
    worst_j = std::max(worst_j, rel(j, scale * conv));
  }
  return {worst_q <= 1e-6 && worst_j <= 1e-8, "Q-hat max rel " + sci(worst_q) + ", J max rel " + sci(worst_j)};
}

struct Shell {
  int code;
  std::string out;
};

Shell shell(const std::string& args) {
  const std::string command = std::string(CASIMIR_CLI_PATH) + " " + args + " 2>/dev/null";
  Shell r{-1, {}};
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// 10. CLI contracts.
Outcome cli_contracts() {
  const std::string base = "--model drude --wp-ev 9 --nu-ev 0.035 --gap-nm 10";
  const auto a = shell("force " + base + " --temp-k 300 --velocity 1e-2 --regime general");
  const auto b = shell("force " + base + " --temp-k 300 --velocity 1e-2 --regime general");
  const auto s1 = shell("sweep " + base + " --temp-k zero --param velocity --from 1 --to 10 --points 5 --format csv --jobs 3");
  const auto s2 = shell("sweep " + base + " --temp-k zero --param velocity --from 1 --to 10 --points 5 --format csv --jobs 1");
  const bool identical = a.code == 0 && !a.out.empty() && a.out == b.out && s1.out == s2.out;
  const int bad_regime = shell("force " + base + " --temp-k 300 --velocity 1 --regime zero-t").code;
  const int bad_velocity = shell("force " + base + " --temp-k 300 --velocity 0").code;
  const int numerical =
      shell("force " + base + " --temp-k 300 --velocity 1 --regime general --rtol 1e-15 --max-subdivisions 1").code;
  const auto cmp = shell("compare " + base + " --temp-k 300 --velocity 1");
  const bool all_true = cmp.code == 0 && cmp.out.find("\"passed\": false") == std::string::npos &&
                        cmp.out.find("\"all_passed\": true") != std::string::npos;
  const bool ok = identical && bad_regime == 2 && bad_velocity == 2 && numerical == 3 && all_true;
  return {ok, std::string("byte-identical ") + (identical ? "yes" : "no") + ", exits " + std::to_string(a.code) +
                  "/" + std::to_string(bad_regime) + "/" + std::to_string(bad_velocity) + "/" +
                  std::to_string(numerical) + ", compare checks " + (all_true ? "all true" : "not all true")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Bose integral constant pi^2/3", 0.1, bose_constant},
      {2, "k-space moments G and G_P", 1.0, moments},
      {3, "linear / cubic force ratio", 0.1, ratio},
      {4, "literature factor chain", 0.1, factor_chain},
      {5, "general pipeline vs closed forms", 300.0, regime_consistency},
      {6, "velocity scaling exponents", 300.0, scaling},
      {7, "delta-sequence convergence", 30.0, delta_sequence},
      {8, "plasmon exponential suppression", 60.0, plasmon},
      {9, "closed form vs quadrature oracles", 30.0, oracle_equivalence},
      {10, "CLI contracts", 5.0, cli_contracts},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = elapsed < c.time_limit_s;
    const bool passed = o.passed && in_time;
    failures += passed ? 0 : 1;
    std::printf("%s %2d %s: %s [%.3f s, limit %g s%s]\n", passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), elapsed, c.time_limit_s, in_time ? "" : ", too slow");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
