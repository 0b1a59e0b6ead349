#pragma once

// Permittivity models, the surface response R = (eps - 1) / (eps + 1) and the
// oscillator spectral density m^2 alpha_I(m^2) extracted from Im R.
//
// Sign convention: frequencies enter the Drude form through xi = i*omega, so
// Im eps <= 0 and Im R <= 0 for a passive medium. The spectral density carries
// an explicit minus sign, -Im R / (2 pi^2 rho), and is therefore non-negative.
// Tabulated input follows the usual optics convention (Im eps >= 0) and is
// conjugated on load.

#include <complex>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace casimir::material {

using complex = std::complex<double>;

struct Drude {
  double omega_p = 0.0;  // rad/s, >= 0 (0 is vacuum)
  double nu = 0.0;       // rad/s, >= 0

  void validate() const;
  double omega_sp() const;
};

/// Undamped surface plasmon: Im R is a single delta line at omega_sp.
struct PlasmonLine {
  double omega_sp = 0.0;  // rad/s, > 0

  void validate() const;
};

struct TabulatedSample {
  double omega;  // rad/s
  complex eps;   // internal convention (Im eps <= 0)
};

/// Permittivity sampled on a strictly increasing grid, interpolated linearly
/// in log(omega). Queries outside the grid throw DomainError.
class Tabulated {
 public:
  /// `samples` are in the optics convention (Im eps >= 0).
  explicit Tabulated(std::vector<TabulatedSample> samples);

  /// Reads `omega_rad_s,eps_re,eps_im` CSV (header required).
  static Tabulated from_csv(std::istream& in);
  static Tabulated from_csv_file(const std::string& path);

  complex eps(double omega) const;
  double omega_min() const { return samples_.front().omega; }
  double omega_max() const { return samples_.back().omega; }
  std::span<const TabulatedSample> samples() const { return samples_; }

 private:
  std::vector<TabulatedSample> samples_;
};

using MaterialModel = std::variant<Drude, PlasmonLine, Tabulated>;

/// eps = 1 + omega_p^2 / (xi (xi + nu)) at xi = i omega.
complex eps_drude(double omega, const Drude& model);

/// (eps - 1) / (eps + 1); throws SingularResponse on the surface-mode pole.
complex response_R(complex eps);

/// Permittivity of any continuous model. PlasmonLine evaluates the lossless
/// Drude form with omega_p = sqrt(2) omega_sp.
complex permittivity(const MaterialModel& model, double omega);

/// Im R(omega) for omega > 0. A PlasmonLine has no continuous part and yields
/// 0; its delta line is exposed through plasmon_line_weight(). A Tabulated
/// material is taken as lossless outside its tabulated band.
double im_response(const MaterialModel& model, double omega);

/// Weight w of Im R = -w delta(omega - omega_sp), i.e. (pi/2) omega_sp.
double plasmon_line_weight(double omega_sp);

bool is_line_spectrum(const MaterialModel& model);

/// Small-m Drude slope: m^2 alpha_I(m^2) = slope * m for m < m_max.
struct DrudeSlope {
  double slope = 0.0;  // m^3 / J
  double m_max = 0.0;  // J
};

struct DeltaLine {
  double omega = 0.0;   // rad/s
  double weight = 0.0;  // Im R = -weight * delta(omega - omega_line)
};

/// Oscillator spectrum m^2 alpha_I(m^2) as a function of energy m = hbar omega.
/// Values are in m^3 (polarizability volume per unit d(m^2), times m^2).
class SpectralDensity {
 public:
  enum class Kind { Continuous, DrudeSmallM, DeltaLines };

  static SpectralDensity continuous(std::function<double(double)> density,
                                    std::optional<DrudeSlope> small_m = std::nullopt);
  static SpectralDensity drude_small_m(DrudeSlope slope);
  static SpectralDensity delta_lines(std::vector<DeltaLine> lines, double rho);

  Kind kind() const { return kind_; }

  /// m^2 alpha_I(m^2) at energy m (J). Not defined for DeltaLines.
  double operator()(double m) const;

  /// Upper energy for which the representation is valid (J); +inf when
  /// unrestricted.
  double m_max() const;

  /// Linear small-m slope, present for DrudeSmallM and for Drude-derived
  /// continuous spectra.
  const std::optional<DrudeSlope>& small_m() const { return small_m_; }
  /// The DrudeSmallM approximation of this spectrum.
  SpectralDensity small_m_approximation() const;

  std::span<const DeltaLine> lines() const { return lines_; }
  double rho() const { return rho_; }

 private:
  Kind kind_ = Kind::Continuous;
  std::function<double(double)> density_;
  std::optional<DrudeSlope> small_m_;
  std::vector<DeltaLine> lines_;
  double rho_ = 0.0;
};

/// Default validity cutoff of the small-m slope, 0.1 hbar omega_sp.
double default_small_m_cutoff(const Drude& model);

/// m^2 alpha_I = -Im R(m / hbar) / (2 pi^2 rho). For a Drude model with
/// omega_p > 0 the small-m slope D = hbar nu / (rho (pi hbar omega_p)^2) is
/// attached, valid below `m_max` (default 0.1 hbar omega_sp). A PlasmonLine
/// becomes a DeltaLines spectrum.
SpectralDensity spectral_density_from_R(const MaterialModel& model, double rho,
                                        std::optional<double> m_max = std::nullopt);

/// D = hbar nu / (rho (pi hbar omega_p)^2).
double drude_slope(const Drude& model, double rho);

}  // namespace casimir::material
