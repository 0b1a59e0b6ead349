#include "casimir/numerics.hpp"

#include <cstdlib>
#include <string>

namespace casimir::numerics {

void QuadratureSpec::validate(bool semi_infinite) const {
  if (!(rel_tol > 0.0)) throw DomainError("QuadratureSpec: rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw DomainError("QuadratureSpec: abs_tol must be >= 0");
  if (max_subdivisions < 1) throw DomainError("QuadratureSpec: max_subdivisions must be >= 1");
  if (semi_infinite && !(semi_infinite_decay_scale > 0.0 && std::isfinite(semi_infinite_decay_scale)))
    throw DomainError("QuadratureSpec: semi_infinite_decay_scale must be > 0");
}

double rel_tol_from_env(double fallback) {
  const char* raw = std::getenv("CASIMIR_QUAD_RTOL");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0.0))
    throw DomainError(std::string("CASIMIR_QUAD_RTOL is not a positive number: ") + raw);
  return value;
}

QuadratureSpec default_spec() {
  QuadratureSpec spec;
  spec.rel_tol = rel_tol_from_env(1e-9);
  return spec;
}

QuadratureSpec default_nested_spec() {
  QuadratureSpec spec;
  spec.rel_tol = rel_tol_from_env(1e-6);
  return spec;
}

std::vector<double> least_squares(const std::vector<std::vector<double>>& columns,
                                  const std::vector<double>& y) {
  const std::size_t n = columns.size();
  if (n == 0) throw DomainError("least_squares: no basis columns");
  for (const auto& c : columns)
    if (c.size() != y.size()) throw DomainError("least_squares: column length mismatch");
  if (y.size() < n) throw DomainError("least_squares: underdetermined fit");

  // Normal equations, solved with partial pivoting. The bases used here are
  // tiny (two or three columns).
  std::vector<std::vector<double>> m(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < y.size(); ++k) m[i][j] += columns[i][k] * columns[j][k];
    for (std::size_t k = 0; k < y.size(); ++k) m[i][n] += columns[i][k] * y[k];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    std::swap(m[col], m[pivot]);
    if (m[col][col] == 0.0) throw DomainError("least_squares: singular basis");
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  std::vector<double> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) coeffs[i] = m[i][n] / m[i][i];
  return coeffs;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("fit_slope: need >= 2 points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw DomainError("fit_slope: degenerate abscissae");
  return sxy / sxx;
}

}  // namespace casimir::numerics
