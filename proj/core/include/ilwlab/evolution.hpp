#pragma once

#include <functional>
#include <vector>

#include "ilwlab/field.hpp"

namespace ilw {

enum class Variant { ilw, renorm_ilw, bo, scaled_ilw };

/// Which evolution to integrate. All variants read
///   d/dt u = L u + d/dx (u^2)
/// with L the dispersive Fourier multiplier of the variant. delta is the
/// depth parameter, required finite and positive except for BO (ignored).
struct EquationSpec {
  Variant variant = Variant::bo;
  double delta = 0.0;

  static EquationSpec ilw(double delta);
  static EquationSpec renorm_ilw(double delta);
  static EquationSpec bo() { return {Variant::bo, 0.0}; }
  static EquationSpec scaled_ilw(double delta);
};

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);

struct SolveConfig {
  double dt = 1e-3;
  double t_final = 1.0;
  int snapshot_stride = 1;
  double dealias = 2.0 / 3.0;
  double blowup_threshold = 10.0;
};

struct Trajectory {
  EquationSpec eq;
  TorusGrid grid;
  std::vector<double> times;
  std::vector<SpectralField> fields;

  size_t size() const { return times.size(); }
};

/// Purely imaginary dispersion symbol of the variant at frequency xi.
cdouble linear_symbol(const EquationSpec& eq, double xi);

/// d/dx of the dealiased pointwise square. Modes with |n| >= dealias * N/2
/// are zeroed on input and output; the zero mode of the result is exactly 0.
SpectralField nonlinear_rhs(const SpectralField& u, double dealias = 2.0 / 3.0);

/// Fourth-order exponential time differencing step (Cox-Matthews coefficients,
/// phi-functions by contour averaging near the origin). Exact on the linear
/// flow when the nonlinearity vanishes.
class Etdrk4Stepper {
 public:
  using Nonlinearity = std::function<SpectralField(const SpectralField&)>;

  Etdrk4Stepper(const TorusGrid& grid, const EquationSpec& eq, double dt,
                double dealias = 2.0 / 3.0);

  /// Replace the quadratic nonlinearity (test hook; pass nullptr to restore).
  void set_nonlinearity(Nonlinearity n);

  SpectralField step(const SpectralField& u) const;

  double dt() const { return dt_; }

 private:
  TorusGrid grid_;
  double dt_;
  double dealias_;
  Nonlinearity nonlinearity_;
  std::vector<cdouble> e_full_, e_half_, q_, f1_, f2_, f3_;
};

SpectralField etdrk4_step(const SpectralField& u, const EquationSpec& eq, double dt,
                          double dealias = 2.0 / 3.0);

/// Integrate from u0 with snapshots every snapshot_stride steps (t = 0 and
/// t = t_final included). Throws BlowupError if the L2 norm exceeds
/// blowup_threshold times its initial value.
Trajectory solve(const EquationSpec& eq, const SpectralField& u0, const SolveConfig& config);

/// Exact spectral realization of u(t, x) -> u(t, x + h t): the mode-n
/// coefficient picks up the phase exp(i (n/lambda) h t).
SpectralField galilean_tau(const SpectralField& f, double h, double t);
Trajectory galilean_tau(const Trajectory& traj, double h);

/// Galilean mean-removal map u(t, x) -> u(t, x - 2 mu t) - mu, and its inverse
/// u(t, x) -> u(t, x + 2 mu t) + mu.
Trajectory gamma_transform(const Trajectory& traj, double mu);
Trajectory gamma_inverse(const Trajectory& traj, double mu);

/// Amplitude/space/time dilation u -> lambda^{-1} u(lambda^{-2} t, lambda^{-1} x)
/// onto the lambda-dilated torus. Snapshot times are scaled by lambda^2; the
/// mode-n target coefficient reads the mode-n source coefficient / lambda.
SpectralField scale_field(const SpectralField& f, double lambda, int n_points_target);
Trajectory scale_transform(const Trajectory& traj, double lambda, int n_points_target);

}  // namespace ilw
