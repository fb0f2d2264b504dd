#pragma once

#include <vector>

#include "ilwlab/evolution.hpp"
#include "ilwlab/field.hpp"

namespace ilw {

enum class WindowId { canonical };

/// Window value at time t for a trajectory covering [0, t_span]. The canonical
/// window is the Littlewood-Paley bump mapped onto [0, T]: identically 1 on
/// the middle ~78% and smoothly zero at both endpoints.
double window_value(WindowId id, double t, double t_span);

/// Space-time Fourier data of a windowed trajectory: spatial modes n crossed
/// with temporal frequencies tau on a power-of-two padded axis.
/// coeffs approximates  integral w(t) u(t) exp(-i tau t) dt  at each mode.
class SpaceTimeField {
 public:
  TorusGrid grid;
  WindowId window = WindowId::canonical;
  double dt = 0.0;      // snapshot spacing
  double t_span = 0.0;  // trajectory window [0, T]
  int n_time = 0;       // padded temporal length (power of two, >= 2 M)

  /// windowed[m][i]: spatial coefficients of w(t_m) u(t_m), natural mode order
  std::vector<std::vector<cdouble>> windowed;
  /// coeffs[k][i]: temporal frequency index k = 0..n_time-1 maps to
  /// tau = (k - n_time/2) * dtau, spatial index i in natural mode order
  std::vector<std::vector<cdouble>> coeffs;

  double dtau() const;
  double tau(int k) const { return (k - n_time / 2) * dtau(); }
  int n_snapshots() const { return static_cast<int>(windowed.size()); }
};

/// Build the space-time data from a uniformly sampled trajectory.
SpaceTimeField build_spacetime(const Trajectory& traj, WindowId window = WindowId::canonical);

}  // namespace ilw
