#pragma once

#include "ilwlab/evolution.hpp"
#include "ilwlab/field.hpp"

namespace ilw {

/// F with dF/dx = v exactly and zero mean. Input must be mean-zero.
SpectralField mean_zero_primitive(const SpectralField& v);

/// W = P_{+,hi}(exp(i F[v])). The exponential is evaluated pointwise on a grid
/// with 4x the modes of v and truncated back; inputs whose exponential carries
/// more than 1e-10 of its mass above mode N/2 are rejected (ResolutionError).
SpectralField gauge_W(const SpectralField& v);

/// w = dW/dx. Also evaluates the product form i P_{+,hi}(exp(iF) v) and throws
/// if the two disagree beyond 1e-12 * ||v||.
SpectralField gauge_w(const SpectralField& v);

/// exp(+iF) (sign = +1) or exp(-iF) (sign = -1) on the 4x working grid.
SpectralField gauge_exponential(const SpectralField& v, int sign = +1);

/// || dx P+hi(e^{iF}) - i P+hi(e^{iF} v) ||_{l2}, the dual-formula defect that
/// gauge_w checks internally.
double gauge_w_defect(const SpectralField& v);

/// The gauge chain for one state: v, its primitive, W, and w.
struct GaugeState {
  SpectralField v, F, W, w;
  static GaugeState make(const SpectralField& v);
};

/// The four pieces of the gauged nonlinearity
///   N_delta(w, v) = -2 dx P+hi(W P- dx v) - 2 dx P+hi(P_lo e^{iF} P- dx v)
///                   + i dx P+hi(e^{iF} Q_delta v) - i P0(v^2) w.
/// delta = infinity zeroes the third term.
struct NdeltaTerms {
  SpectralField t1, t2, t3, t4, total;
};

NdeltaTerms nonlinearity_Ndelta(const SpectralField& w, const SpectralField& v, double delta);

/// l2 residual of the high-frequency reconstruction of v from w:
///   P+HI v = -i P+HI(e^{-iF} w) + P+HI(P+hi e^{-iF} . P_lo(e^{iF} v))
///            - i P+HI(P+HI e^{-iF} . dx P-hi e^{iF}).
double reconstruct_check(const SpectralField& w, const SpectralField& v);

enum class GaugedEquation { F_equation, w_equation };

struct ResidualSeries {
  std::vector<double> times;
  std::vector<double> values;

  double max_value() const;
};

/// Centered-difference residual of the gauged equations along a renormalized
/// ILW trajectory, evaluated at interior snapshot times.
ResidualSeries gauged_residual(const Trajectory& traj, double delta, GaugedEquation which);

}  // namespace ilw
