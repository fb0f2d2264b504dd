#pragma once

#include <cmath>
#include <numbers>

#include "ilwlab/errors.hpp"

namespace ilw {

/// Uniform collocation grid on the dilated torus R/(2*pi*lambda*Z).
///
/// Retained integer modes are n in {-N/2, ..., N/2-1}; the physical frequency
/// of mode n is n/lambda. This indexation is fixed project-wide.
struct TorusGrid {
  double lambda = 1.0;
  int n_points = 0;

  double period() const { return 2.0 * std::numbers::pi * lambda; }
  double node(int k) const { return period() * static_cast<double>(k) / n_points; }
  int min_mode() const { return -n_points / 2; }
  int max_mode() const { return n_points / 2 - 1; }
  double frequency(int n) const { return static_cast<double>(n) / lambda; }

  friend bool operator==(const TorusGrid& a, const TorusGrid& b) {
    return a.lambda == b.lambda && a.n_points == b.n_points;
  }
};

inline TorusGrid make_grid(double lambda, int n_points) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw ValidationError("make_grid: lambda must be positive and finite");
  if (n_points < 8) throw ValidationError("make_grid: n_points must be >= 8");
  if (n_points % 2 != 0) throw ValidationError("make_grid: n_points must be even");
  return TorusGrid{lambda, n_points};
}

}  // namespace ilw
