#include "casimir/material.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/numerics.hpp"

namespace casimir::material {

namespace {

using numerics::constants::hbar;
using numerics::constants::pi;

constexpr double kPoleThreshold = 1e-300;

double parse_field(const std::string& text, std::size_t line_no) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("tabulated eps: bad number on line " + std::to_string(line_no));
  }
  while (used < text.size() && (text[used] == ' ' || text[used] == '\r')) ++used;
  if (used != text.size())
    throw DomainError("tabulated eps: trailing characters on line " + std::to_string(line_no));
  return value;
}

}  // namespace

void Drude::validate() const {
  if (!(omega_p >= 0.0) || !std::isfinite(omega_p))
    throw DomainError("Drude: omega_p must be >= 0");
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("Drude: nu must be >= 0");
}

double Drude::omega_sp() const { return omega_p / std::numbers::sqrt2; }

void PlasmonLine::validate() const {
  if (!(omega_sp > 0.0) || !std::isfinite(omega_sp))
    throw DomainError("PlasmonLine: omega_sp must be > 0");
}

Tabulated::Tabulated(std::vector<TabulatedSample> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 2) throw DomainError("tabulated eps: need at least two samples");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (!(s.omega > 0.0) || !std::isfinite(s.omega))
      throw DomainError("tabulated eps: omega must be positive and finite");
    if (i > 0 && !(s.omega > samples_[i - 1].omega))
      throw DomainError("tabulated eps: omega grid must be strictly increasing");
    if (!(s.eps.imag() >= 0.0))
      throw DomainError("tabulated eps: Im eps < 0 violates passivity");
    if (!std::isfinite(s.eps.real()) || !std::isfinite(s.eps.imag()))
      throw DomainError("tabulated eps: non-finite permittivity");
  }
  for (auto& s : samples_) s.eps = std::conj(s.eps);
}

Tabulated Tabulated::from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("tabulated eps: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "omega_rad_s,eps_re,eps_im")
    throw DomainError("tabulated eps: header must be 'omega_rad_s,eps_re,eps_im'");

  std::vector<TabulatedSample> samples;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 3)
      throw DomainError("tabulated eps: expected 3 columns on line " + std::to_string(line_no));
    samples.push_back({parse_field(fields[0], line_no),
                       complex(parse_field(fields[1], line_no), parse_field(fields[2], line_no))});
  }
  return Tabulated(std::move(samples));
}

Tabulated Tabulated::from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("tabulated eps: cannot open " + path);
  return from_csv(in);
}

complex Tabulated::eps(double omega) const {
  if (!(omega >= omega_min() && omega <= omega_max()))
    throw DomainError("tabulated eps: omega outside tabulated range (no extrapolation)");
  auto upper = std::lower_bound(samples_.begin(), samples_.end(), omega,
                                [](const TabulatedSample& s, double w) { return s.omega < w; });
  if (upper->omega == omega) return upper->eps;
  auto lower = upper - 1;
  const double t = (std::log(omega) - std::log(lower->omega)) /
                   (std::log(upper->omega) - std::log(lower->omega));
  return lower->eps + t * (upper->eps - lower->eps);
}

complex eps_drude(double omega, const Drude& model) {
  if (!(omega > 0.0)) throw DomainError("eps_drude: omega must be > 0");
  const complex xi(0.0, omega);
  return 1.0 + model.omega_p * model.omega_p / (xi * (xi + model.nu));
}

complex response_R(complex eps) {
  const complex denom = eps + 1.0;
  if (std::abs(denom) < kPoleThreshold)
    throw SingularResponse("response_R: eps = -1 (surface-mode pole)");
  if (std::isinf(eps.real()) || std::isinf(eps.imag())) return 1.0;
  return (eps - 1.0) / denom;
}

complex permittivity(const MaterialModel& model, double omega) {
  return std::visit(
      [omega](const auto& m) -> complex {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Drude>) {
          return eps_drude(omega, m);
        } else if constexpr (std::is_same_v<M, PlasmonLine>) {
          return eps_drude(omega, Drude{std::numbers::sqrt2 * m.omega_sp, 0.0});
        } else {
          return m.eps(omega);
        }
      },
      model);
}

double im_response(const MaterialModel& model, double omega) {
  if (!(omega > 0.0)) throw DomainError("im_response: omega must be > 0");
  if (std::holds_alternative<PlasmonLine>(model)) return 0.0;
  if (const auto* d = std::get_if<Drude>(&model)) {
    // R = w_sp^2 / (w_sp^2 - w^2 + i nu w), written out to avoid the
    // cancellation in eps - 1 at large omega.
    const double wsp2 = 0.5 * d->omega_p * d->omega_p;
    const double re = wsp2 - omega * omega;
    const double im = d->nu * omega;
    const double denom = re * re + im * im;
    if (denom == 0.0) throw SingularResponse("im_response: undamped surface-mode pole");
    return -wsp2 * im / denom;
  }
  if (const auto* t = std::get_if<Tabulated>(&model))
    if (omega < t->omega_min() || omega > t->omega_max()) return 0.0;
  return response_R(permittivity(model, omega)).imag();
}

double plasmon_line_weight(double omega_sp) { return 0.5 * pi * omega_sp; }

bool is_line_spectrum(const MaterialModel& model) {
  return std::holds_alternative<PlasmonLine>(model);
}

SpectralDensity SpectralDensity::continuous(std::function<double(double)> density,
                                            std::optional<DrudeSlope> small_m) {
  SpectralDensity s;
  s.kind_ = Kind::Continuous;
  s.density_ = std::move(density);
  s.small_m_ = small_m;
  return s;
}

SpectralDensity SpectralDensity::drude_small_m(DrudeSlope slope) {
  if (!(slope.slope > 0.0) || !(slope.m_max > 0.0))
    throw DomainError("DrudeSmallM: slope and m_max must be > 0");
  SpectralDensity s;
  s.kind_ = Kind::DrudeSmallM;
  s.small_m_ = slope;
  return s;
}

SpectralDensity SpectralDensity::delta_lines(std::vector<DeltaLine> lines, double rho) {
  if (!(rho > 0.0)) throw DomainError("DeltaLines: rho must be > 0");
  for (const auto& l : lines)
    if (!(l.omega > 0.0) || !(l.weight >= 0.0)) throw DomainError("DeltaLines: bad line");
  SpectralDensity s;
  s.kind_ = Kind::DeltaLines;
  s.lines_ = std::move(lines);
  s.rho_ = rho;
  return s;
}

double SpectralDensity::operator()(double m) const {
  switch (kind_) {
    case Kind::Continuous:
      return density_(m);
    case Kind::DrudeSmallM:
      return small_m_->slope * m;
    case Kind::DeltaLines:
      break;
  }
  throw DomainError("SpectralDensity: a delta-line spectrum has no pointwise value");
}

double SpectralDensity::m_max() const {
  if (kind_ == Kind::DrudeSmallM) return small_m_->m_max;
  return std::numeric_limits<double>::infinity();
}

SpectralDensity SpectralDensity::small_m_approximation() const {
  if (!small_m_) throw DomainError("SpectralDensity: no small-m slope available");
  return drude_small_m(*small_m_);
}

double default_small_m_cutoff(const Drude& model) { return 0.1 * hbar * model.omega_sp(); }

double drude_slope(const Drude& model, double rho) {
  if (!(rho > 0.0)) throw DomainError("drude_slope: rho must be > 0");
  if (!(model.omega_p > 0.0)) throw DomainError("drude_slope: omega_p must be > 0");
  const double x = pi * hbar * model.omega_p;
  return hbar * model.nu / (rho * x * x);
}

SpectralDensity spectral_density_from_R(const MaterialModel& model, double rho,
                                        std::optional<double> m_max) {
  if (!(rho > 0.0)) throw DomainError("spectral_density_from_R: rho must be > 0");
  if (const auto* line = std::get_if<PlasmonLine>(&model)) {
    line->validate();
    return SpectralDensity::delta_lines({{line->omega_sp, plasmon_line_weight(line->omega_sp)}},
                                        rho);
  }
  std::optional<DrudeSlope> slope;
  if (const auto* d = std::get_if<Drude>(&model)) {
    d->validate();
    if (d->omega_p > 0.0 && d->nu > 0.0) {
      const double cutoff = m_max.value_or(default_small_m_cutoff(*d));
      if (!(cutoff > 0.0)) throw DomainError("spectral_density_from_R: m_max must be > 0");
      slope = DrudeSlope{drude_slope(*d, rho), cutoff};
    }
  }
  const double scale = 1.0 / (2.0 * pi * pi * rho);
  auto density = [model, scale](double m) {
    if (m <= 0.0) return 0.0;
    return -im_response(model, m / hbar) * scale;
  };
  return SpectralDensity::continuous(density, slope);
}

}  // namespace casimir::material
