#include "catch_amalgamated.hpp"

#include <cmath>

#include "tacs/bands.hpp"

using namespace tacs;
using Catch::Matchers::WithinAbs;

TEST_CASE("half-integer spectra pair into doublets") {
  for (int t = 1; t <= 41; t += 2) {
    const auto s = solve_spectrum(HalfInt::from_twice(t));
    CHECK(pair_degeneracies(s).size() == static_cast<std::size_t>(t + 1) / 2);
  }
  CHECK_THROWS_AS(pair_degeneracies(solve_spectrum(HalfInt::from_twice(4))), std::invalid_argument);
}

TEST_CASE("an unpaired level is reported") {
  auto s = solve_spectrum(HalfInt::from_twice(5));
  s.levels[0].energy_over_chi -= 1e-3;
  CHECK_THROWS_AS(pair_degeneracies(s), InvariantViolation);
}

TEST_CASE("spectra are symmetric under E -> -E") {
  for (int t = 0; t <= 41; ++t)
    CHECK(check_mirror_symmetry(solve_spectrum(HalfInt::from_twice(t))).ok);
}

TEST_CASE("zero-energy doublet exists iff k is zero or even") {
  for (int t = 1; t <= 41; t += 2) {
    const int k = (t - 1) / 2;
    const auto s = solve_spectrum(HalfInt::from_twice(t));
    const double scale = energy_scale(s.energies());
    int zeros = 0;
    for (const auto &l : s.levels)
      zeros += std::abs(l.energy_over_chi) < 1e-8 * scale;
    CHECK(zeros == (k % 2 == 0 ? 2 : 0));
    CHECK(count_negative_distinct(s) == expected_negative_doublets(k));
  }
}

TEST_CASE("Omega reproduces band energies in every sector") {
  for (int t = 1; t <= 21; ++t) {
    const auto s = solve_spectrum(HalfInt::from_twice(t));
    const double scale = energy_scale(s.energies());
    for (const auto &l : s.levels)
      if (l.config.k() > 0)
        CHECK_THAT(band_energy_from_omega(l.config, omega(l)), WithinAbs(l.energy_over_chi, 1e-9 * scale));
  }
}

TEST_CASE("band fits") {
  const auto bands = extract_bands(HalfInt::from_twice(21), JParity::Half);
  REQUIRE(bands.size() >= 2);
  CHECK(bands[0].points.size() == 11);
  CHECK(bands[0].points.front().J == HalfInt::from_twice(1));
  CHECK(bands[1].points.front().J == HalfInt::from_twice(5));

  const auto f1 = quadratic_fit(bands[0]);
  CHECK(f1.a > -1.02);
  CHECK(f1.a < -0.98);
  CHECK(f1.b > 0.36);
  CHECK(f1.b < 0.47);
  CHECK(f1.c > -0.10);
  CHECK(f1.c < 0.01);
  CHECK(f1.omega_identity_defect < 1e-8);

  const auto f2 = quadratic_fit(bands[1]);
  CHECK(f2.a > -1.05);
  CHECK(f2.a < -0.95);
  CHECK(f2.b > 3.1);
  CHECK(f2.b < 3.4);
  CHECK(f2.c > -2.1);
  CHECK(f2.c < -1.7);
}

TEST_CASE("integer-J bands") {
  const auto bands = extract_bands(HalfInt::from_twice(20), JParity::Integer);
  REQUIRE_FALSE(bands.empty());
  for (const auto &p : bands[0].points)
    CHECK(p.J.is_integer());
  CHECK(quadratic_fit(bands[0]).omega_identity_defect < 1e-8);
}

TEST_CASE("too few points cannot be fitted") {
  const auto bands = extract_bands(HalfInt::from_twice(3), JParity::Half);
  REQUIRE(bands.size() == 1);
  CHECK_THROWS_AS(quadratic_fit(Band{2, {}}), std::invalid_argument);
  CHECK_THROWS_AS(extract_bands(HalfInt::from_twice(0), JParity::Half), std::invalid_argument);
}
