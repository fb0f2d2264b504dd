#include <doctest.h>

#include <filesystem>
#include <random>

#include "ilwlab/serialize.hpp"
#include "test_helpers.hpp"

using namespace ilw;
using ilw::testing::random_band_limited;

TEST_CASE("format_double: 17 significant digits round-trip bit-exactly") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double v = dist(rng) * std::pow(10.0, i % 20 - 10);
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("field snapshot JSON round trip is bit-exact") {
  const TorusGrid g = make_grid(1.5, 32);
  std::mt19937_64 rng(2);
  const SpectralField f = random_band_limited(g, 10, 1.0, rng);
  const SpectralField back = field_from_json(field_to_json(f));
  CHECK(back.grid().lambda == f.grid().lambda);
  CHECK(back.n_points() == f.n_points());
  CHECK(back.real_valued() == f.real_valued());
  for (int n = g.min_mode(); n <= g.max_mode(); ++n) CHECK(back.coeff(n) == f.coeff(n));
}

TEST_CASE("field snapshot JSON rejects malformed input") {
  CHECK_THROWS_AS(field_from_json("{\"lambda\": 1.0}"), ValidationError);
  CHECK_THROWS_AS(
      field_from_json("{\"lambda\": 1.0, \"n_points\": 8, \"coeffs\": [1.0, 2.0]}"),
      ValidationError);
  CHECK_THROWS(field_from_json("not json"));
}

TEST_CASE("trajectory persistence round trip") {
  const TorusGrid g = make_grid(1.0, 16);
  std::mt19937_64 rng(3);
  Trajectory traj{EquationSpec::renorm_ilw(2.0), g, {}, {}};
  for (int i = 0; i < 4; ++i) {
    traj.times.push_back(0.25 * i);
    traj.fields.push_back(random_band_limited(g, 5, 0.7, rng));
  }

  const auto dir = std::filesystem::temp_directory_path() / "ilwlab_test_traj";
  std::filesystem::remove_all(dir);
  save_trajectory(traj, dir);
  const Trajectory back = load_trajectory(dir);

  CHECK(back.eq.variant == Variant::renorm_ilw);
  CHECK(back.eq.delta == 2.0);
  CHECK(back.grid == g);
  REQUIRE(back.size() == traj.size());
  for (size_t i = 0; i < traj.size(); ++i) {
    CHECK(back.times[i] == traj.times[i]);
    for (int n = g.min_mode(); n <= g.max_mode(); ++n)
      CHECK(back.fields[i].coeff(n) == traj.fields[i].coeff(n));
  }
  std::filesystem::remove_all(dir);
}
