#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ilwlab/diagnostics.hpp"
#include "ilwlab/evolution.hpp"
#include "ilwlab/multipliers.hpp"
#include "test_helpers.hpp"

using namespace ilw;
using ilw::testing::cosine_samples;
using ilw::testing::random_band_limited;

TEST_CASE("linear_symbol: reference values") {
  CHECK(linear_symbol(EquationSpec::bo(), 2.0) == cdouble(0.0, 4.0));
  CHECK(linear_symbol(EquationSpec::bo(), -2.0) == cdouble(0.0, -4.0));
  CHECK(linear_symbol(EquationSpec::bo(), 0.0) == cdouble(0.0, 0.0));

  const cdouble ilw1 = linear_symbol(EquationSpec::ilw(1.0), 1.0);
  CHECK(ilw1.real() == 0.0);
  CHECK(ilw1.imag() == doctest::Approx(0.3130352854993313).epsilon(1e-14));
  CHECK(linear_symbol(EquationSpec::ilw(1.0), 0.0) == cdouble(0.0, 0.0));
  CHECK(linear_symbol(EquationSpec::renorm_ilw(2.0), 0.0) == cdouble(0.0, 0.0));

  // renormalized symbol approaches BO exponentially at fixed frequency
  for (double delta : {4.0, 8.0}) {
    const cdouble r = linear_symbol(EquationSpec::renorm_ilw(delta), 2.0);
    const double gap = std::abs(r - cdouble(0.0, 4.0));
    CHECK(gap <= 2.0 * 4.0 * std::exp(-2.0 * delta * 2.0) * 1.0001);
    CHECK(gap > 0.0);
  }

  const cdouble scaled = linear_symbol(EquationSpec::scaled_ilw(0.5), 1.5);
  const cdouble plain = linear_symbol(EquationSpec::ilw(0.5), 1.5);
  CHECK(std::abs(scaled - 6.0 * plain) < 1e-15);

  // purely imaginary and odd across a sweep
  for (double xi = -30.0; xi <= 30.0; xi += 0.7) {
    for (const auto& eq : {EquationSpec::bo(), EquationSpec::ilw(0.7),
                           EquationSpec::renorm_ilw(1.9), EquationSpec::scaled_ilw(2.0)}) {
      const cdouble v = linear_symbol(eq, xi);
      CHECK(v.real() == 0.0);
      CHECK(linear_symbol(eq, -xi) == -v);
    }
  }
}

TEST_CASE("EquationSpec validates delta") {
  CHECK_THROWS_AS(EquationSpec::ilw(0.0), ValidationError);
  CHECK_THROWS_AS(EquationSpec::renorm_ilw(-1.0), ValidationError);
  CHECK_THROWS_AS(EquationSpec::scaled_ilw(std::numeric_limits<double>::infinity()),
                  ValidationError);
}

TEST_CASE("nonlinear_rhs: double angle and constants") {
  const TorusGrid g = make_grid(1.0, 64);
  const SpectralField u = transform(g, cosine_samples(g, 1));
  const SpectralField rhs = nonlinear_rhs(u);
  // dx(cos^2 x) = -sin(2x): coefficients at +-2 are +-i/2... -sin(2x) has
  // coeff(2) = i/2, coeff(-2) = -i/2
  CHECK(std::abs(rhs.coeff(2) - cdouble(0.0, 0.5)) < 1e-14);
  CHECK(std::abs(rhs.coeff(-2) - cdouble(0.0, -0.5)) < 1e-14);
  CHECK(std::abs(rhs.coeff(0)) == 0.0);
  for (int n : {1, 3, 4, 5}) CHECK(std::abs(rhs.coeff(n)) < 1e-15);

  std::vector<double> constant(64, 1.7);
  const SpectralField c = transform(g, constant);
  CHECK(l2_coeff_norm(nonlinear_rhs(c)) < 1e-15);
}

TEST_CASE("nonlinear_rhs: the 2/3 rule removes aliased modes") {
  const TorusGrid g = make_grid(1.0, 64);
  // mode 20 is kept (< 64/3); its square would alias 40 -> -24 on this grid
  const SpectralField u = transform(g, cosine_samples(g, 20));
  const SpectralField clean = nonlinear_rhs(u, 2.0 / 3.0);
  // exact dx(u^2) restricted to |n| < 64/3 is zero (modes 0 and +-40 only)
  CHECK(l2_coeff_norm(clean) < 1e-13);

  const SpectralField dirty = nonlinear_rhs(u, 1.0);  // no dealiasing
  CHECK(std::abs(dirty.coeff(-24)) > 1e-3);  // aliased image of +-40
}

TEST_CASE("etdrk4: exact on the linear flow") {
  const TorusGrid g = make_grid(1.0, 64);
  std::mt19937_64 rng(13);
  const SpectralField u = random_band_limited(g, 20, 1.0, rng);
  const double dt = 0.37;

  for (const auto& eq : {EquationSpec::bo(), EquationSpec::ilw(1.0),
                         EquationSpec::renorm_ilw(0.5)}) {
    Etdrk4Stepper stepper(g, eq, dt);
    stepper.set_nonlinearity([&](const SpectralField& f) {
      return SpectralField(f.grid(), f.real_valued());  // zero
    });
    const SpectralField stepped = stepper.step(u);
    SpectralField expected = u;
    for (int n = g.min_mode(); n <= g.max_mode(); ++n)
      expected.set_coeff(n, std::exp(dt * linear_symbol(eq, g.frequency(n))) * u.coeff(n));
    CHECK(l2_coeff_norm(stepped - expected) < 1e-14 * l2_coeff_norm(u));
  }
}

TEST_CASE("etdrk4: fourth-order self convergence on a short BO run") {
  const TorusGrid g = make_grid(1.0, 64);
  SpectralField u0(g);
  u0.set_coeff(1, cdouble(0.25, 0.0));
  u0.set_coeff(-1, cdouble(0.25, 0.0));
  u0.set_coeff(2, cdouble(0.0, -0.125));
  u0.set_coeff(-2, cdouble(0.0, 0.125));

  auto run = [&](double dt) {
    SolveConfig cfg;
    cfg.dt = dt;
    cfg.t_final = 0.2;
    cfg.snapshot_stride = static_cast<int>(std::lround(0.2 / dt));
    return solve(EquationSpec::bo(), u0, cfg).fields.back();
  };
  const SpectralField a = run(4e-3), b = run(2e-3), c = run(1e-3);
  const double e1 = l2_coeff_norm(a - b), e2 = l2_coeff_norm(b - c);
  const double order = std::log2(e1 / e2);
  CHECK(order == doctest::Approx(4.0).epsilon(0.12));
}

TEST_CASE("solve: zero data, snapshot times, mean invariance") {
  const TorusGrid g = make_grid(1.0, 32);
  SolveConfig cfg;
  cfg.dt = 1e-2;
  cfg.t_final = 0.1;
  cfg.snapshot_stride = 2;

  const Trajectory z = solve(EquationSpec::bo(), SpectralField(g), cfg);
  CHECK(z.size() == 6);
  for (const auto& f : z.fields) CHECK(l2_coeff_norm(f) == 0.0);
  for (size_t i = 0; i < z.size(); ++i)
    CHECK(z.times[i] == doctest::Approx(0.02 * static_cast<double>(i)).epsilon(1e-15));

  // ILW keeps the mean bit-exactly
  auto samples = cosine_samples(g, 1, 0.1);
  for (auto& s : samples) s += 0.5;
  const SpectralField u0 = transform(g, samples);
  const Trajectory traj = solve(EquationSpec::ilw(1.0), u0, cfg);
  for (const auto& f : traj.fields) CHECK(f.coeff(0) == u0.coeff(0));
}

TEST_CASE("solve: validation and blow-up signalling") {
  const TorusGrid g = make_grid(1.0, 32);
  const SpectralField u0 = transform(g, cosine_samples(g, 1, 0.1));
  SolveConfig cfg;
  cfg.dt = 1e-2;
  cfg.t_final = 0.1;

  SolveConfig bad = cfg;
  bad.t_final = 0.095;  // not an integer multiple of dt
  CHECK_THROWS_AS(solve(EquationSpec::bo(), u0, bad), ValidationError);

  SolveConfig badstride = cfg;
  badstride.snapshot_stride = 3;  // 10 steps not divisible by 3
  CHECK_THROWS_AS(solve(EquationSpec::bo(), u0, badstride), ValidationError);

  auto with_mean = cosine_samples(g, 1, 0.1);
  for (auto& s : with_mean) s += 1.0;
  CHECK_THROWS_AS(solve(EquationSpec::renorm_ilw(1.0), transform(g, with_mean), cfg),
                  ValidationError);

  SolveConfig tight = cfg;
  tight.blowup_threshold = 0.5;  // any state trips the growth guard
  CHECK_THROWS_AS(solve(EquationSpec::bo(), u0, tight), BlowupError);
}
