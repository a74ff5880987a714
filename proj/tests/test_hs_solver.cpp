#include "catch_amalgamated.hpp"

#include <cmath>

#include "tacs/hs_solver.hpp"
#include "tacs/spectrum.hpp"

using namespace tacs;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ModelConfig config(int twice_j, int k, int nu_a, int nu_b) {
  return ModelConfig::make(HalfInt::from_twice(twice_j), Sector{k, nu_a, nu_b});
}

} // namespace

TEST_CASE("model constants") {
  const auto cfg = config(21, 10, 1, 0);
  CHECK_THAT(cfg.c1, WithinAbs(-3 + 2 * std::sqrt(2.0), 1e-16));
  CHECK_THAT(cfg.gamma_J(), WithinAbs(0.5 - 10.5, 1e-13));
  CHECK_THAT(cfg.energy_prefactor(), WithinRel((3 + 2 * std::sqrt(2.0)) * 20, 1e-14));
  const auto [da, db] = cfg.constraint_defects();
  CHECK(std::abs(da) < 1e-13);
  CHECK(std::abs(db) < 1e-13);
  CHECK_THAT(cfg.alpha(), WithinRel(cfg.c1sq() * (1 - 10.5 + 1) + (0 - 10.5 + 1), 1e-15));
}

TEST_CASE("sectors per J") {
  CHECK(enumerate_sectors(HalfInt::from_twice(9)) == std::vector<Sector>{{4, 1, 0}, {4, 0, 1}});
  CHECK(enumerate_sectors(HalfInt::from_twice(8)) == std::vector<Sector>{{4, 0, 0}, {3, 1, 1}});
  CHECK(enumerate_sectors(HalfInt::from_twice(0)) == std::vector<Sector>{{0, 0, 0}});
  CHECK_THROWS_AS(ModelConfig::make(HalfInt::from_twice(9), Sector{3, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ModelConfig::make(HalfInt::from_twice(9), Sector{4, 1, 1}), std::invalid_argument);
}

TEST_CASE("recurrence matrix entries") {
  const auto cfg = config(9, 4, 1, 0);
  const auto f = build_tridiagonal(cfg);
  REQUIRE(f.size() == 5);
  const double c = cfg.c1sq();
  for (int j = 0; j <= 4; ++j)
    CHECK_THAT(double(f.diag[j]), WithinAbs(j * ((c + 1) * (j - 1) + cfg.alpha()), 1e-12));
  for (int j = 1; j <= 4; ++j) {
    CHECK_THAT(double(f.lower[j - 1]), WithinRel(c * (5 - j) * (1 + 4 + j - 4.5 - 0.5), 1e-14));
    CHECK_THAT(double(f.upper[j - 1]), WithinRel((4.5 - (j - 1) - 0.5) * j, 1e-14));
    CHECK(f.lower[j - 1] * f.upper[j - 1] > 0);
  }
}

TEST_CASE("J = 3/2 sector (1,1,0)") {
  const auto pairs = solve_vanvleck(build_tridiagonal(config(3, 1, 1, 0)));
  REQUIRE(pairs.size() == 2);
  CHECK_THAT(pairs[0].g0, WithinRel(-0.539814, 1e-5));
  CHECK_THAT(pairs[1].g0, WithinRel(0.0545323, 1e-5));
  CHECK_THAT(pairs[1].coeffs[0], WithinRel(18.3378, 1e-5));
  CHECK(pairs[1].coeffs[1] == 1.0);
  CHECK_THAT(pairs[0].coeffs[0], WithinRel(-1.85249, 1e-5));
}

TEST_CASE("J = 9/2 sector (4,1,0), third level") {
  const auto cfg = config(9, 4, 1, 0);
  const auto levels = solve_sector(cfg);
  REQUIRE(levels.size() == 5);
  const auto &p = levels[2].polynomial;
  CHECK(levels[2].zeta == 3);
  CHECK_THAT(levels[2].energy_over_chi, WithinAbs(0.0, 1e-12));
  // y = 1154 - 873.992 w - 101.912 w^2 - 9.24264 w^3 + w^4
  CHECK_THAT(p.coeffs[0], WithinRel(1154.0, 1e-5));
  CHECK_THAT(p.coeffs[1], WithinRel(-873.992, 1e-5));
  CHECK_THAT(p.coeffs[2], WithinRel(-101.912, 1e-5));
  CHECK_THAT(p.coeffs[3], WithinRel(-9.24264, 1e-5));
  // The eigenvalue of F, not the linear coefficient.
  CHECK_THAT(p.g0, WithinRel(-3.0294372515, 1e-9));
  CHECK(recurrence_residual(build_tridiagonal(cfg), p.g0, p.coeffs) < 1e-14);
}

TEST_CASE("Table energies for J = 5/2 and 7/2") {
  const auto s5 = solve_sector(config(5, 2, 0, 1));
  CHECK_THAT(s5[0].energy_over_chi, WithinRel(-5.2915, 1e-4));
  CHECK_THAT(s5[1].energy_over_chi, WithinAbs(0.0, 1e-12));
  CHECK_THAT(s5[2].energy_over_chi, WithinRel(5.2915, 1e-4));
  CHECK_THAT(s5[1].polynomial.coeffs[0], WithinRel(-197.995, 1e-5));

  const auto s7 = solve_sector(config(7, 3, 1, 0));
  const double expected[] = {-10.8624, -2.83003, 2.83003, 10.8624};
  for (int i = 0; i < 4; ++i)
    CHECK_THAT(s7[i].energy_over_chi, WithinRel(expected[i], 1e-4));
}

TEST_CASE("energy from coefficients") {
  const auto cfg = config(5, 2, 1, 0);
  // y = -5.82843 + 2.41421 w + w^2 is the zero-energy level.
  const std::vector<double> b{-3 - 2 * std::sqrt(2.0), 1 + std::sqrt(2.0), 1.0};
  CHECK_THAT(energy_from_coeffs(cfg, b), WithinAbs(0.0, 1e-12));
  const std::vector<double> degenerate{1e-14, 1.0, 1.0};
  CHECK_THROWS_AS(energy_from_coeffs(cfg, degenerate), SolverError);
}

TEST_CASE("k = 0 sectors") {
  const auto levels = solve_sector(config(1, 0, 1, 0));
  REQUIRE(levels.size() == 1);
  CHECK(levels[0].polynomial.coeffs == std::vector<double>{1.0});
  CHECK_THAT(levels[0].energy_over_chi, WithinAbs(0.0, 1e-13));
  const auto zero = solve_sector(config(0, 0, 0, 0));
  CHECK_THAT(zero[0].energy_over_chi, WithinAbs(0.0, 1e-13));
}

TEST_CASE("eigenvalues of F are simple and the coefficients solve the recurrence") {
  for (int t = 1; t <= 41; ++t) {
    const auto J = HalfInt::from_twice(t);
    for (const auto &sec : enumerate_sectors(J)) {
      const auto f = build_tridiagonal(ModelConfig::make(J, sec));
      const auto pairs = solve_vanvleck(f);
      REQUIRE(static_cast<int>(pairs.size()) == sec.k + 1);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        CHECK(pairs[i].coeffs.back() == 1.0);
        CHECK(recurrence_residual(f, pairs[i].g0, pairs[i].coeffs) < 1e-10);
        if (i > 0)
          CHECK(pairs[i].g0 > pairs[i - 1].g0);
      }
    }
  }
}

TEST_CASE("a wrong eigenvalue leaves a large recurrence residual") {
  const auto f = build_tridiagonal(config(9, 4, 0, 1));
  const auto pairs = solve_vanvleck(f);
  CHECK(recurrence_residual(f, pairs[1].g0, pairs[0].coeffs) > 1e-3);
}

TEST_CASE("sign-indefinite off-diagonals are rejected") {
  RecurrenceMatrix f;
  f.diag = {0, 1};
  f.lower = {-1};
  f.upper = {1};
  CHECK_THROWS_AS(solve_vanvleck(f), SolverError);
}
