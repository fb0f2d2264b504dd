#pragma once

#include <vector>

#include "ilwlab/evolution.hpp"
#include "ilwlab/field.hpp"
#include "ilwlab/spacetime.hpp"

namespace ilw {

/// Mean value of the field, mu = u_hat(0).
double mean(const SpectralField& u);

/// M(u) = integral u^2 dx = 2 pi lambda sum |u_hat|^2.
double mass(const SpectralField& u);

/// E_delta(u) = 1/2 integral u G_delta dx u dx + 1/3 integral u^3 dx.
/// delta = infinity selects the Benjamin-Ono Hamiltonian (|xi| kernel).
/// The cubic integral is evaluated on a 2x zero-padded grid (alias-free).
double hamiltonian(const SpectralField& u, double delta);

struct ConservationReport {
  std::vector<double> times;
  std::vector<double> means;
  std::vector<double> masses;
  std::vector<double> hamiltonians;
  double max_mean_drift = 0.0;    // absolute
  double max_mass_drift = 0.0;    // relative to |M(u0)| (absolute if zero)
  double max_energy_drift = 0.0;  // relative to |E(u0)| (absolute if zero)
};

ConservationReport conservation_report(const Trajectory& traj);

/// sup over shared snapshot times of || a(t) - b(t) ||_{H^s}.
double hs_error(const Trajectory& a, const Trajectory& b, double s);

enum class SpaceTimeNorm { X, Z, Ztilde, Y };

/// Discrete restriction norms of the windowed extension:
///   X: || <n>^s <tau - |n| n>^b W ||_{l2_n L2_tau}
///   Z: same weight, L1 in tau
///   Ztilde: ( sum_j || Q_j u ||_{Z^{s,b}} )^{1/2}   (as defined, not squared)
///   Y: X^{s,b} + Ztilde^{s, b - 1/2}
double spacetime_norm(const SpaceTimeField& stf, SpaceTimeNorm kind, double s, double b);

/// || u ||_{L4_{t,x}} / || u ||_{X^{0, 3/8}} for the windowed field.
/// Throws on zero denominator.
double strichartz_ratio(const SpaceTimeField& stf);

}  // namespace ilw
