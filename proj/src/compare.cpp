#include "casimir/compare.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/friction.hpp"
#include "casimir/numerics.hpp"

namespace casimir::compare {

namespace {

using numerics::constants::hbar;
using numerics::constants::pi;

Check make_check(std::string name, double value, double expected, double tol) {
  const bool ok = std::abs(value - expected) <= tol * std::abs(expected);
  return {std::move(name), value, expected, tol, ok};
}

}  // namespace

LiteratureParams LiteratureParams::from_drude(const material::Drude& model, double d, double v) {
  model.validate();
  if (!(model.nu > 0.0) || !(model.omega_p > 0.0))
    throw DomainError("LiteratureParams: Drude mapping needs omega_p > 0 and nu > 0");
  LiteratureParams p;
  p.sigma_over_eps0 = model.omega_p * model.omega_p / model.nu;
  p.d = d;
  p.v = v;
  return p;
}

void LiteratureParams::validate() const {
  if (!(sigma_over_eps0 > 0.0)) throw DomainError("LiteratureParams: sigma/eps0 must be > 0");
  if (!(d > 0.0)) throw DomainError("LiteratureParams: d must be > 0");
  if (!(v >= 0.0)) throw DomainError("LiteratureParams: v must be >= 0");
}

PendryResult pendry_force(const LiteratureParams& p) {
  p.validate();
  const double s = p.sigma_over_eps0;
  PendryResult r;
  r.force = 5.0 * hbar * p.v * p.v * p.v / (256.0 * pi * pi * s * s * std::pow(p.d, 6));
  // Low-frequency conductor regime: omega_v ~ v / d below sigma / eps0.
  r.within_validity = p.v < p.d * s;
  return r;
}

bool ConsistencyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

ConsistencyReport consistency_report(const material::Drude& material,
                                     const geometry::PlateConfig& config,
                                     const response::ThermalState& thermal, double v) {
  config.validate();
  if (!(v > 0.0)) throw DomainError("consistency_report: velocity must be > 0");
  const material::MaterialModel model = material;

  ConsistencyReport report;
  report.f_ours_zero_t = friction::force_zero_t(model, config, v).force_per_area;
  const auto lit = LiteratureParams::from_drude(material, config.d, v);
  const auto pendry = pendry_force(lit);
  report.f_pendry = pendry.force;
  report.pendry_within_validity = pendry.within_validity;
  report.f_vp = volokitin_persson_force(lit);
  report.f_barton = barton_force(lit);

  report.checks.push_back(make_check("F_ours_zeroT / F_Pendry == 12",
                                     report.f_ours_zero_t / report.f_pendry, 12.0, kCheckTolerance));
  report.checks.push_back(make_check("F_ours_zeroT == F_B", report.f_ours_zero_t,
                                     report.f_barton, kCheckTolerance));
  report.checks.push_back(make_check("F_ours_zeroT / F_VP == 2",
                                     report.f_ours_zero_t / report.f_vp, 2.0, kCheckTolerance));

  if (!thermal.is_zero()) {
    report.f_ours_linear = friction::force_linear(model, config, thermal, v).force_per_area;
    report.ratio_linear_over_cubic = *report.f_ours_linear / report.f_ours_zero_t;
    const double x = config.d / (thermal.beta() * hbar * v);
    report.expected_ratio = (1.0 / 12.0) * (64.0 * pi * pi / 5.0) * x * x;
    report.checks.push_back(make_check("F_linear / F_zeroT == (1/12)(64 pi^2/5)(d/(beta hbar v))^2",
                                       *report.ratio_linear_over_cubic, *report.expected_ratio,
                                       kCheckTolerance));
  }

  report.annotations = {
      "zeta(5) ~ 1.037 in Barton's zero-T result is disregarded (not applied to F_B)",
      "zeta(3) ~ 1.2 attribution factor versus Volokitin-Persson at finite T is not applied",
      "sigma/eps0 of Pendry equals 4 pi sigma of Volokitin-Persson; input uses sigma/eps0 = omega_p^2/nu",
  };
  if (!pendry.within_validity)
    report.annotations.emplace_back("Pendry closed form outside its low-frequency validity (v >= d sigma/eps0)");
  return report;
}

}  // namespace casimir::compare
