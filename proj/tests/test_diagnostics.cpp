#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "ilwlab/diagnostics.hpp"
#include "ilwlab/multipliers.hpp"
#include "test_helpers.hpp"

using namespace ilw;
using ilw::testing::cosine_samples;
using ilw::testing::random_band_limited;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("mean and mass references") {
  const TorusGrid g = make_grid(1.0, 64);
  const SpectralField cosx = transform(g, cosine_samples(g, 1));
  CHECK(mean(cosx) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(mass(cosx) == doctest::Approx(kPi).epsilon(1e-14));

  std::vector<double> constant(64, 0.8);
  const SpectralField c = transform(g, constant);
  CHECK(mean(c) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(mass(c) == doctest::Approx(2.0 * kPi * 0.64).epsilon(1e-14));

  CHECK(mean(SpectralField(g)) == 0.0);
  CHECK(mass(SpectralField(g)) == 0.0);

  // convention consistency: mass = 2 pi lambda (H^0 norm)^2
  const TorusGrid g2 = make_grid(1.7, 64);
  std::mt19937_64 rng(2);
  const SpectralField r = random_band_limited(g2, 20, 1.3, rng);
  CHECK(mass(r) ==
        doctest::Approx(g2.period() * std::pow(sobolev_norm(r, 0.0), 2)).epsilon(1e-14));
}

TEST_CASE("hamiltonian: cosine references") {
  const TorusGrid g = make_grid(1.0, 64);
  const SpectralField cosx = transform(g, cosine_samples(g, 1));
  CHECK(hamiltonian(cosx, 1.0) == doctest::Approx(0.49171467661954138).epsilon(1e-13));
  CHECK(hamiltonian(cosx, kInf) == doctest::Approx(kPi / 2.0).epsilon(1e-13));
  CHECK(hamiltonian(SpectralField(g), 1.0) == 0.0);

  // the cubic term is part of the functional: shift cos x by a constant
  auto samples = cosine_samples(g, 1);
  std::vector<double> cubed(samples.size());
  // E for u = cos x + 0.5: quadratic part unchanged (kernel kills the mean),
  // cubic part = (1/3) integral (cos x + 1/2)^3 = (1/3)(3/2 * pi/2 ... ) --
  // evaluate the reference by direct quadrature on a fine grid
  double cubic_ref = 0.0;
  const int fine = 1 << 14;
  for (int j = 0; j < fine; ++j) {
    const double x = 2.0 * kPi * j / fine;
    cubic_ref += std::pow(std::cos(x) + 0.5, 3);
  }
  cubic_ref *= 2.0 * kPi / fine / 3.0;
  for (auto& s : samples) s += 0.5;
  const SpectralField shifted = transform(g, samples);
  const double expected = 0.49171467661954138 + cubic_ref;
  CHECK(hamiltonian(shifted, 1.0) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("hamiltonian: quadratic part nonnegative for mean-zero fields") {
  const TorusGrid g = make_grid(1.0, 64);
  std::mt19937_64 rng(4);
  for (double delta : {0.1, 1.0, 10.0, kInf}) {
    for (int trial = 0; trial < 20; ++trial) {
      SpectralField u = random_band_limited(g, 20, 0.5, rng);
      // kill the cubic contribution by evaluating on u and -u and averaging:
      // E(u) + E(-u) = 2 * quadratic(u)
      const double quad = 0.5 * (hamiltonian(u, delta) + hamiltonian(-1.0 * u, delta));
      CHECK(quad >= 0.0);
    }
  }
}

TEST_CASE("hamiltonian: deep-water gap matches the exact per-mode identity") {
  const TorusGrid g = make_grid(1.0, 64);
  std::mt19937_64 rng(6);
  const SpectralField u = random_band_limited(g, 10, 0.5, rng);
  for (double delta : {2.0, 8.0, 32.0}) {
    // E_inf - E_delta = pi lambda sum_{n != 0} (1/delta - Q_hat(n)) |u_hat|^2
    double gap_ref = 0.0;
    for (int n = u.min_mode(); n <= u.max_mode(); ++n) {
      if (n == 0) continue;
      const double nu = g.frequency(n);
      const double q = symbol(MultiplierSpec::q_delta(delta), nu).real();
      gap_ref += (1.0 / delta - q) * std::norm(u.coeff(n));
    }
    gap_ref *= 0.5 * g.period();
    const double gap = hamiltonian(u, kInf) - hamiltonian(u, delta);
    CHECK(gap == doctest::Approx(gap_ref).epsilon(1e-11));
  }
  // and the gap vanishes as delta -> infinity
  CHECK(std::abs(hamiltonian(u, kInf) - hamiltonian(u, 1e8)) < 1e-8);
}

TEST_CASE("conservation_report: zero trajectory and a short BO solve") {
  const TorusGrid g = make_grid(1.0, 64);
  Trajectory zero{EquationSpec::bo(), g, {0.0, 0.1}, {SpectralField(g), SpectralField(g)}};
  const ConservationReport zr = conservation_report(zero);
  CHECK(zr.max_mass_drift == 0.0);
  CHECK(zr.max_energy_drift == 0.0);

  SpectralField u0(g);
  u0.set_coeff(1, cdouble(0.05, 0.0));
  u0.set_coeff(-1, cdouble(0.05, 0.0));
  u0.set_coeff(2, cdouble(0.0, -0.025));
  u0.set_coeff(-2, cdouble(0.0, 0.025));
  SolveConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_final = 0.2;
  cfg.snapshot_stride = 20;
  const ConservationReport rep = conservation_report(solve(EquationSpec::bo(), u0, cfg));
  CHECK(rep.max_mean_drift < 1e-14);
  CHECK(rep.max_mass_drift < 1e-9);
  CHECK(rep.max_energy_drift < 1e-7);
}

TEST_CASE("hs_error: references and mismatch detection") {
  const TorusGrid g = make_grid(1.0, 64);
  std::mt19937_64 rng(8);
  Trajectory a{EquationSpec::bo(), g, {0.0, 0.5, 1.0}, {}};
  for (int i = 0; i < 3; ++i) a.fields.push_back(random_band_limited(g, 10, 1.0, rng));
  CHECK(hs_error(a, a, 0.5) == 0.0);

  const SpectralField cosx = transform(g, cosine_samples(g, 1));
  const double eps = 1e-3;
  Trajectory b = a;
  for (auto& f : b.fields) f += eps * cosx;
  for (double s : {0.0, 0.5, 1.0})
    CHECK(hs_error(a, b, s) == doctest::Approx(eps * sobolev_norm(cosx, s)).epsilon(1e-12));

  Trajectory shifted = a;
  shifted.times[1] += 0.1;
  CHECK_THROWS_AS(hs_error(a, shifted, 0.0), ValidationError);
  Trajectory fewer = a;
  fewer.times.pop_back();
  fewer.fields.pop_back();
  CHECK_THROWS_AS(hs_error(a, fewer, 0.0), ValidationError);
}
