#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "ilwlab/field.hpp"

namespace ilw::testing {

/// Deterministic random real mean-zero field with modes in [1, max_mode],
/// scaled to the requested coefficient l2 norm.
inline SpectralField random_band_limited(const TorusGrid& grid, int max_mode, double norm,
                                         std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  SpectralField f(grid, /*real_valued=*/true);
  for (int n = 1; n <= max_mode; ++n) {
    const cdouble c(gauss(rng), gauss(rng));
    f.set_coeff(n, c);
    f.set_coeff(-n, std::conj(c));
  }
  const double current = l2_coeff_norm(f);
  if (current > 0.0) f *= norm / current;
  return f;
}

/// Physical samples of cos(k x / lambda) on the grid.
inline std::vector<double> cosine_samples(const TorusGrid& grid, int k, double amplitude = 1.0) {
  std::vector<double> out(static_cast<size_t>(grid.n_points));
  for (int j = 0; j < grid.n_points; ++j)
    out[static_cast<size_t>(j)] = amplitude * std::cos(k * grid.node(j) / grid.lambda);
  return out;
}

inline std::vector<double> sine_samples(const TorusGrid& grid, int k, double amplitude = 1.0) {
  std::vector<double> out(static_cast<size_t>(grid.n_points));
  for (int j = 0; j < grid.n_points; ++j)
    out[static_cast<size_t>(j)] = amplitude * std::sin(k * grid.node(j) / grid.lambda);
  return out;
}

}  // namespace ilw::testing
