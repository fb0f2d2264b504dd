#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ilwlab/multipliers.hpp"
#include "ilwlab/projectors.hpp"
#include "test_helpers.hpp"

using namespace ilw;
using ilw::testing::cosine_samples;
using ilw::testing::random_band_limited;
using ilw::testing::sine_samples;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// coth(x) - 1/x in long double: series near 0, direct form elsewhere.
long double coth_minus_recip_reference(long double x) {
  const long double a = std::abs(x);
  if (a < 0.25L) {
    const long double x2 = x * x;
    return x * (1.0L / 3.0L +
                x2 * (-1.0L / 45.0L +
                      x2 * (2.0L / 945.0L +
                            x2 * (-1.0L / 4725.0L +
                                  x2 * (2.0L / 93555.0L +
                                        x2 * (-1382.0L / 638512875.0L +
                                              x2 * (4.0L / 18243225.0L)))))));
  }
  return 1.0L / std::tanh(x) - 1.0L / x;
}

}  // namespace

TEST_CASE("stable_coth_minus_sgn: references, symmetry, large arguments") {
  CHECK(stable_coth_minus_sgn(1.0) ==
        doctest::Approx(0.3130352854993313).epsilon(1e-15));
  CHECK(stable_coth_minus_sgn(-1.0) == -stable_coth_minus_sgn(1.0));
  CHECK_THROWS_AS(stable_coth_minus_sgn(0.0), ValidationError);

  // x = 400: the true value ~ 2e-800 underflows; must be finite, not NaN
  const double far = stable_coth_minus_sgn(400.0);
  CHECK(std::isfinite(far));
  CHECK(far >= 0.0);
  CHECK(far < 1e-300);
  CHECK(std::isfinite(stable_coth_minus_sgn(700.0)));

  // within 4 ulp of the long double reference while the value is a normal
  // double (beyond x ~ 354 the true value is subnormal, then underflows)
  for (double x = 1e-8; x <= 350.0; x *= 1.7) {
    const long double ref = 2.0L / std::expm1(2.0L * static_cast<long double>(x));
    const double got = stable_coth_minus_sgn(x);
    const double rel = std::abs(static_cast<double>((got - ref) / ref));
    CHECK(rel < 4.0 * std::numeric_limits<double>::epsilon());
  }
  for (double x : {360.0, 500.0, 700.0}) {
    const double got = stable_coth_minus_sgn(x);
    CHECK(std::isfinite(got));
    CHECK(got >= 0.0);
  }
}

TEST_CASE("stable_coth_minus_recip: zero convention, series window, accuracy") {
  CHECK(stable_coth_minus_recip(0.0) == 0.0);
  CHECK(stable_coth_minus_recip(1.0) ==
        doctest::Approx(0.3130352854993313).epsilon(1e-15));
  CHECK(stable_coth_minus_recip(1e-6) ==
        doctest::Approx(3.3333333333331111e-7).epsilon(1e-13));
  CHECK(stable_coth_minus_recip(-1.0) == -stable_coth_minus_recip(1.0));

  for (double x = 1e-8; x <= 100.0; x *= 1.3) {
    const long double ref = coth_minus_recip_reference(static_cast<long double>(x));
    const double got = stable_coth_minus_recip(x);
    CHECK(std::abs(static_cast<double>((got - ref) / ref)) < 1e-12);
  }
}

TEST_CASE("symbol: reference values") {
  CHECK(std::abs(symbol(MultiplierSpec::q_delta(1.0), 1.0) -
                 cdouble(0.3130352854993313, 0.0)) < 1e-15);
  CHECK(symbol(MultiplierSpec::g_delta(2.0), 0.0) == cdouble(0.0, 0.0));
  CHECK(symbol(MultiplierSpec::tilbert(3.0), 0.0) == cdouble(0.0, 0.0));
  CHECK(symbol(MultiplierSpec::dx_inv(), 0.0) == cdouble(0.0, 0.0));

  // Tilbert(1) at xi = 20: -i (1 + 2/(e^40 - 1)), within 1e-16 of -i
  const cdouble t20 = symbol(MultiplierSpec::tilbert(1.0), 20.0);
  CHECK(std::abs(t20 - cdouble(0.0, -1.0)) < 1e-16);
  // at moderate arguments the exponentially small tail is preserved
  CHECK(symbol(MultiplierSpec::tilbert(1.0), 8.0).imag() < -1.0);

  CHECK(symbol(MultiplierSpec::hilbert(), 2.5) == cdouble(0.0, -1.0));
  CHECK(symbol(MultiplierSpec::hilbert(), -2.5) == cdouble(0.0, 1.0));
  CHECK(symbol(MultiplierSpec::dx(), 3.0) == cdouble(0.0, 3.0));
  CHECK(std::abs(symbol(MultiplierSpec::bessel(2.0), 1.0) - cdouble(2.0, 0.0)) < 1e-15);
  CHECK(std::abs(symbol(MultiplierSpec::riesz(0.5), 4.0) - cdouble(2.0, 0.0)) < 1e-15);

  // delta = infinity degenerations
  CHECK(symbol(MultiplierSpec::tilbert(kInf), 2.0) == symbol(MultiplierSpec::hilbert(), 2.0));
  CHECK(symbol(MultiplierSpec::g_delta(kInf), -2.0) == symbol(MultiplierSpec::hilbert(), -2.0));
  CHECK(symbol(MultiplierSpec::q_delta(kInf), 5.0) == cdouble(0.0, 0.0));
}

TEST_CASE("symbol symmetry classes over random frequencies") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> dist(1e-4, 100.0);
  const auto odd_kinds = {MultiplierSpec::hilbert(), MultiplierSpec::tilbert(0.7),
                          MultiplierSpec::g_delta(1.3), MultiplierSpec::dx(),
                          MultiplierSpec::dx_inv()};
  const auto even_kinds = {MultiplierSpec::q_delta(0.9), MultiplierSpec::bessel(1.5),
                           MultiplierSpec::riesz(0.5)};
  for (int i = 0; i < 10000; ++i) {
    const double xi = dist(rng);
    for (const auto& spec : odd_kinds) CHECK(symbol(spec, -xi) == -symbol(spec, xi));
    for (const auto& spec : even_kinds) CHECK(symbol(spec, -xi) == symbol(spec, xi));
    const auto prop = MultiplierSpec::bo_propagator(0.37);
    CHECK(symbol(prop, -xi) == std::conj(symbol(prop, xi)));
  }
}

TEST_CASE("apply: Hilbert transform of cosine is sine") {
  const TorusGrid g = make_grid(1.0, 64);
  const SpectralField cosx = transform(g, cosine_samples(g, 1));
  const SpectralField h = apply(MultiplierSpec::hilbert(), cosx);
  const SpectralField sinx = transform(g, sine_samples(g, 1));
  CHECK(l2_coeff_norm(h - sinx) < 1e-15);
  CHECK(h.hermitian_defect() == 0.0);
}

TEST_CASE("apply: dx_inv after dx is the nonzero-mode identity") {
  const TorusGrid g = make_grid(2.0, 64);
  std::mt19937_64 rng(3);
  const SpectralField f = random_band_limited(g, 20, 1.0, rng);
  const SpectralField round =
      apply(MultiplierSpec::dx_inv(), apply(MultiplierSpec::dx(), f));
  CHECK(l2_coeff_norm(round - sharp_project(f, SharpKind::nonzero)) <
        1e-14 * l2_coeff_norm(f));
}

TEST_CASE("apply: q_delta contracts monotonically in delta") {
  const TorusGrid g = make_grid(1.0, 32);
  std::mt19937_64 rng(4);
  const SpectralField f = random_band_limited(g, 10, 1.0, rng);
  double prev = l2_coeff_norm(apply(MultiplierSpec::q_delta(1.0), f));
  for (double delta : {2.0, 4.0, 8.0, 16.0}) {
    const double cur = l2_coeff_norm(apply(MultiplierSpec::q_delta(delta), f));
    CHECK(cur < prev);
    prev = cur;
  }
  // and coefficient-wise convergence to zero for each retained mode
  for (int n = 1; n <= 10; ++n)
    CHECK(std::abs(symbol(MultiplierSpec::q_delta(64.0), static_cast<double>(n))) < 1e-50);
}

TEST_CASE("operator identities assembled symbol-wise") {
  for (double delta : {0.5, 1.0, 2.0}) {
    for (double xi = 1e-3; xi <= 1e3; xi *= 1.9) {
      for (double sign : {1.0, -1.0}) {
        const double x = sign * xi;
        // Q = (T - H) dx
        const cdouble lhs = symbol(MultiplierSpec::q_delta(delta), x);
        const cdouble rhs = (symbol(MultiplierSpec::tilbert(delta), x) -
                             symbol(MultiplierSpec::hilbert(), x)) *
                            cdouble(0.0, x);
        CHECK(std::abs(lhs - rhs) < 1e-14 * (1.0 + std::abs(x)));

        // G = H + Q dx^{-1} - delta^{-1} dx^{-1}
        const cdouble g = symbol(MultiplierSpec::g_delta(delta), x);
        const cdouble assembled =
            symbol(MultiplierSpec::hilbert(), x) +
            symbol(MultiplierSpec::q_delta(delta), x) * symbol(MultiplierSpec::dx_inv(), x) -
            (1.0 / delta) * symbol(MultiplierSpec::dx_inv(), x);
        CHECK(std::abs(g - assembled) <
              1e-14 * (1.0 + std::abs(x) + 1.0 / (delta * std::abs(x))));
      }
    }
  }
}

TEST_CASE("tilbert approaches hilbert at the stable-kernel rate") {
  for (double delta : {1.0, 4.0}) {
    for (double xi = 1.0 / delta; xi * delta <= 18.0; xi *= 1.4) {
      const cdouble diff = symbol(MultiplierSpec::tilbert(delta), xi) -
                           symbol(MultiplierSpec::hilbert(), xi);
      const double expected = stable_coth_minus_sgn(delta * xi);
      CHECK(std::abs(diff - cdouble(0.0, -expected)) <
            4.0 * std::numeric_limits<double>::epsilon());
    }
  }
}

TEST_CASE("bo_propagator group property") {
  const TorusGrid g = make_grid(1.0, 64);
  std::mt19937_64 rng(8);
  const SpectralField f = random_band_limited(g, 30, 1.0, rng);
  const auto p1 = MultiplierSpec::bo_propagator(0.3);
  const auto p2 = MultiplierSpec::bo_propagator(0.45);
  const auto p12 = MultiplierSpec::bo_propagator(0.75);
  const SpectralField two_step = apply(p1, apply(p2, f));
  const SpectralField one_step = apply(p12, f);
  CHECK(l2_coeff_norm(two_step - one_step) < 1e-13 * l2_coeff_norm(f));
  // unitary
  CHECK(l2_coeff_norm(one_step) == doctest::Approx(l2_coeff_norm(f)).epsilon(1e-14));
}

TEST_CASE("smoothing_sup: reference point and argmax at 1 for delta >= 1") {
  const SmoothingSup at1 = smoothing_sup(1.0, 0.0, 10000);
  CHECK(at1.sup == doctest::Approx(0.3130352854993313).epsilon(1e-14));
  CHECK(at1.ratio == doctest::Approx(0.15651764274966565).epsilon(1e-14));
  CHECK(at1.argmax == 1);

  for (double delta : {1.0, 2.0, 8.0, 64.0})
    for (double s : {0.0, 0.5, 1.0}) CHECK(smoothing_sup(delta, s, 2000).argmax == 1);

  CHECK(smoothing_sup(kInf, 0.0, 100).sup == 0.0);
}

TEST_CASE("smoothing_sup: normalized ratio below 1 on a quick sweep") {
  for (int p = -4; p <= 10; p += 2)
    for (double s : {0.0, 0.5, 1.0}) {
      const SmoothingSup r = smoothing_sup(std::pow(2.0, p), s, 1000);
      CHECK(r.ratio <= 1.0);
    }
}
