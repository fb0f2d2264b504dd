#include "ilwlab/spacetime.hpp"

#include <cmath>
#include <numbers>

#include "ilwlab/fft.hpp"
#include "ilwlab/projectors.hpp"

namespace ilw {

double window_value(WindowId id, double t, double t_span) {
  if (id != WindowId::canonical) throw ValidationError("unknown window id");
  if (t < 0.0 || t > t_span) return 0.0;
  const double u = std::abs(2.0 * t / t_span - 1.0);
  return lp_bump(1.6 * u);
}

double SpaceTimeField::dtau() const {
  return 2.0 * std::numbers::pi / (static_cast<double>(n_time) * dt);
}

SpaceTimeField build_spacetime(const Trajectory& traj, WindowId window) {
  const size_t m_count = traj.size();
  if (m_count < 2) throw ValidationError("build_spacetime: need at least 2 snapshots");
  const double step = traj.times[1] - traj.times[0];
  for (size_t i = 1; i + 1 < m_count; ++i)
    if (std::abs(traj.times[i + 1] - traj.times[i] - step) > 1e-12 * (1.0 + std::abs(step)))
      throw ValidationError("build_spacetime: snapshots not uniformly sampled");

  SpaceTimeField stf;
  stf.grid = traj.grid;
  stf.window = window;
  stf.dt = step;
  stf.t_span = traj.times.back() - traj.times.front();

  int padded = 1;
  while (padded < static_cast<int>(2 * m_count)) padded *= 2;
  stf.n_time = padded;

  const int n_modes = traj.grid.n_points;
  stf.windowed.assign(m_count, std::vector<cdouble>(static_cast<size_t>(n_modes)));
  for (size_t m = 0; m < m_count; ++m) {
    const double w = window_value(window, traj.times[m] - traj.times.front(), stf.t_span);
    auto c = traj.fields[m].coeffs();
    for (int i = 0; i < n_modes; ++i) stf.windowed[m][static_cast<size_t>(i)] = w * c[static_cast<size_t>(i)];
  }

  // temporal DFT per spatial mode; fft::forward normalizes by 1/K, so scale
  // by dt * K to approximate the time integral
  stf.coeffs.assign(static_cast<size_t>(padded), std::vector<cdouble>(static_cast<size_t>(n_modes)));
  std::vector<cdouble> line(static_cast<size_t>(padded));
  const double scale = step * static_cast<double>(padded);
  for (int i = 0; i < n_modes; ++i) {
    std::fill(line.begin(), line.end(), cdouble(0.0, 0.0));
    for (size_t m = 0; m < m_count; ++m) line[m] = stf.windowed[m][static_cast<size_t>(i)];
    auto spectrum = fft::forward(line);
    for (int k = 0; k < padded; ++k)
      stf.coeffs[static_cast<size_t>(k)][static_cast<size_t>(i)] = scale * spectrum[static_cast<size_t>(k)];
  }
  return stf;
}

}  // namespace ilw
