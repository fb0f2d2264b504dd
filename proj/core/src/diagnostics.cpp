#include "ilwlab/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ilwlab/fft.hpp"
#include "ilwlab/multipliers.hpp"
#include "ilwlab/projectors.hpp"

namespace ilw {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double modulation_weight(double tau, double nu, double b) {
  const double gap = tau - std::abs(nu) * nu;
  return std::pow(1.0 + gap * gap, 0.5 * b);
}

double bessel_weight(double nu, double s) { return std::pow(1.0 + nu * nu, 0.5 * s); }

// || <n>^s <tau - |n|n>^b W ||_{l2_n Lp_tau} for p = 1, 2, with an optional
// extra per-mode factor (the Littlewood-Paley piece).
double weighted_norm(const SpaceTimeField& stf, double s, double b, int p,
                     const std::vector<double>* mode_factor) {
  const double measure = stf.dtau() / (2.0 * std::numbers::pi);
  const int n_modes = stf.grid.n_points;
  double acc = 0.0;
  for (int i = 0; i < n_modes; ++i) {
    const int n = i + stf.grid.min_mode();
    const double nu = stf.grid.frequency(n);
    double inner = 0.0;
    for (int k = 0; k < stf.n_time; ++k) {
      const double wmod = modulation_weight(stf.tau(k), nu, b);
      const double mag = std::abs(stf.coeffs[static_cast<size_t>(k)][static_cast<size_t>(i)]);
      inner += (p == 2) ? measure * wmod * wmod * mag * mag : measure * wmod * mag;
    }
    const double ltau = (p == 2) ? std::sqrt(inner) : inner;
    double term = bessel_weight(nu, s) * ltau;
    if (mode_factor) term *= (*mode_factor)[static_cast<size_t>(i)];
    acc += term * term;
  }
  return std::sqrt(acc);
}

double ztilde_norm(const SpaceTimeField& stf, double s, double b) {
  // largest dyadic scale that can touch the retained frequencies
  double max_freq = 0.0;
  for (int n = stf.grid.min_mode(); n <= stf.grid.max_mode(); ++n)
    max_freq = std::max(max_freq, std::abs(stf.grid.frequency(n)));

  double sum = 0.0;
  const int n_modes = stf.grid.n_points;
  std::vector<double> factor(static_cast<size_t>(n_modes));
  for (int j = 0;; ++j) {
    bool any = false;
    for (int i = 0; i < n_modes; ++i) {
      const double nu = stf.grid.frequency(i + stf.grid.min_mode());
      factor[static_cast<size_t>(i)] = lp_symbol(j, nu);
      any = any || factor[static_cast<size_t>(i)] != 0.0;
    }
    if (any) sum += weighted_norm(stf, s, b, /*p=*/1, &factor);
    if (j >= 1 && std::pow(2.0, j - 1) * 1.25 > max_freq) break;
  }
  return std::sqrt(sum);
}

}  // namespace

double mean(const SpectralField& u) { return u.coeff(0).real(); }

double mass(const SpectralField& u) {
  double acc = 0.0;
  for (const auto& c : u.coeffs()) acc += std::norm(c);
  return u.grid().period() * acc;
}

double hamiltonian(const SpectralField& u, double delta) {
  if (!(delta > 0.0)) throw ValidationError("hamiltonian: delta must be positive or infinity");
  double quad = 0.0;
  for (int n = u.min_mode(); n <= u.max_mode(); ++n) {
    const double nu = u.grid().frequency(n);
    const double kernel =
        (delta == kInf) ? std::abs(nu) : nu * stable_coth_minus_recip(delta * nu);
    quad += kernel * std::norm(u.coeff(n));
  }
  quad *= 0.5 * u.grid().period();

  // cubic term on a 2x grid: triple products of the retained band are
  // alias-free there
  const SpectralField padded = resample(u, 2 * u.n_points());
  const auto samples = inverse_transform(padded);
  double cubic = 0.0;
  for (double x : samples) cubic += x * x * x;
  cubic *= u.grid().period() / static_cast<double>(samples.size()) / 3.0;

  return quad + cubic;
}

ConservationReport conservation_report(const Trajectory& traj) {
  if (traj.size() == 0) throw ValidationError("conservation_report: empty trajectory");
  const double delta =
      traj.eq.variant == Variant::bo ? kInf : traj.eq.delta;
  ConservationReport rep;
  rep.times = traj.times;
  for (const auto& f : traj.fields) {
    rep.means.push_back(mean(f));
    rep.masses.push_back(mass(f));
    rep.hamiltonians.push_back(hamiltonian(f, delta));
  }
  const double m0 = rep.masses.front(), e0 = rep.hamiltonians.front();
  for (size_t i = 0; i < rep.times.size(); ++i) {
    rep.max_mean_drift = std::max(rep.max_mean_drift, std::abs(rep.means[i] - rep.means.front()));
    const double dm = std::abs(rep.masses[i] - m0);
    rep.max_mass_drift = std::max(rep.max_mass_drift, m0 != 0.0 ? dm / std::abs(m0) : dm);
    const double de = std::abs(rep.hamiltonians[i] - e0);
    rep.max_energy_drift = std::max(rep.max_energy_drift, e0 != 0.0 ? de / std::abs(e0) : de);
  }
  return rep;
}

double hs_error(const Trajectory& a, const Trajectory& b, double s) {
  if (!(a.grid == b.grid)) throw ValidationError("hs_error: grid mismatch");
  if (a.size() != b.size()) throw ValidationError("hs_error: snapshot count mismatch");
  double sup = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.times[i] - b.times[i]) > 1e-9 * (1.0 + std::abs(a.times[i])))
      throw ValidationError("hs_error: snapshot times mismatch");
    sup = std::max(sup, sobolev_norm(a.fields[i] - b.fields[i], s));
  }
  return sup;
}

double spacetime_norm(const SpaceTimeField& stf, SpaceTimeNorm kind, double s, double b) {
  if (stf.n_time == 0) throw ValidationError("spacetime_norm: empty field");
  switch (kind) {
    case SpaceTimeNorm::X:
      return weighted_norm(stf, s, b, /*p=*/2, nullptr);
    case SpaceTimeNorm::Z:
      return weighted_norm(stf, s, b, /*p=*/1, nullptr);
    case SpaceTimeNorm::Ztilde:
      return ztilde_norm(stf, s, b);
    case SpaceTimeNorm::Y:
      return weighted_norm(stf, s, b, /*p=*/2, nullptr) + ztilde_norm(stf, s, b - 0.5);
  }
  throw ValidationError("spacetime_norm: unknown kind");
}

double strichartz_ratio(const SpaceTimeField& stf) {
  const double denom = spacetime_norm(stf, SpaceTimeNorm::X, 0.0, 0.375);
  if (denom == 0.0) throw ValidationError("strichartz_ratio: zero X^{0,3/8} norm");

  const double dx_measure = stf.grid.period() / stf.grid.n_points;
  double acc = 0.0;
  for (const auto& snapshot : stf.windowed) {
    const auto samples = fft::backward(snapshot);
    for (const auto& v : samples) {
      const double a2 = std::norm(v);
      acc += a2 * a2;
    }
  }
  const double l4 = std::pow(acc * stf.dt * dx_measure, 0.25);
  return l4 / denom;
}

}  // namespace ilw
