#include "catch_amalgamated.hpp"

#include <cmath>

#include "tacs/eigenstates.hpp"
#include "tacs/spectrum.hpp"

using namespace tacs;
using Catch::Matchers::WithinAbs;

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10.0);
  CHECK(binomial(10, 0) == 1.0);
  CHECK(binomial(3, 4) == 0.0);
  CHECK(binomial(3, -1) == 0.0);
  CHECK(binomial(40, 20) == 137846528820.0);
}

TEST_CASE("boson occupations fix M") {
  const Sector s{4, 1, 0};
  for (int rho = 0; rho <= 4; ++rho) {
    const auto [na, nb] = boson_occupations(s, rho);
    CHECK(na + nb == 9);
    CHECK(nb == 2 * rho);
  }
}

TEST_CASE("J = 5/2 ground state of sector (2,1,0)") {
  const auto J = HalfInt::from_twice(5);
  const auto levels = solve_sector(ModelConfig::make(J, {2, 1, 0}));
  const auto v = state_amplitudes(levels[0]);
  // Only M = 5/2, 1/2, -3/2 are populated.
  CHECK(v.amplitudes[1] == 0.0);
  CHECK(v.amplitudes[3] == 0.0);
  CHECK(v.amplitudes[5] == 0.0);
  CHECK_THAT(v.vector().norm(), WithinAbs(1.0, 1e-15));
  const auto h = build_hamiltonian(J, HamiltonianForm::RotatedTA);
  CHECK(verify_state(v, h, levels[0].energy_over_chi) < 1e-13);
}

TEST_CASE("every state solves the rotated eigen-equation") {
  for (int t = 0; t <= 21; ++t) {
    const auto J = HalfInt::from_twice(t);
    const auto h = build_hamiltonian(J, HamiltonianForm::RotatedTA);
    const auto oracle = diagonalize(h);
    for (const auto &sec : enumerate_sectors(J)) {
      const auto levels = solve_sector(ModelConfig::make(J, sec));
      std::vector<StateVector> states;
      for (const auto &l : levels) {
        states.push_back(state_amplitudes(l));
        CHECK(verify_state(states.back(), h, l.energy_over_chi) < 1e-10);
        CHECK_THAT(oracle_subspace_overlap(states.back(), oracle, l.energy_over_chi), WithinAbs(1.0, 1e-9));
      }
      const auto g = overlap_matrix(states);
      CHECK((g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("the reciprocal factorial weighting is not an eigenvector") {
  const auto J = HalfInt::from_twice(9);
  const auto levels = solve_sector(ModelConfig::make(J, {4, 0, 1}));
  const auto &l = levels[1];
  const auto b = b_rho_coeffs(l.polynomial);
  StateVector v{J, l.config.sector, l.zeta, std::vector<double>(J.multiplicity(), 0.0)};
  double norm = 0.0;
  for (int rho = 0; rho <= 4; ++rho) {
    const auto [na, nb] = boson_occupations(l.config.sector, rho);
    const double a = b[rho] * std::pow(l.config.c1, rho) / std::sqrt(std::tgamma(na + 1.0) * std::tgamma(nb + 1.0));
    v.amplitudes[basis_index(J, HalfInt::from_twice(na - nb))] = a;
    norm += a * a;
  }
  for (double &a : v.amplitudes)
    a /= std::sqrt(norm);
  CHECK(verify_state(v, build_hamiltonian(J, HamiltonianForm::RotatedTA), l.energy_over_chi) > 1e-2);
}

TEST_CASE("state checks reject mismatched inputs") {
  const auto J = HalfInt::from_twice(3);
  const auto levels = solve_sector(ModelConfig::make(J, {1, 1, 0}));
  const auto v = state_amplitudes(levels[0]);
  CHECK_THROWS_AS(verify_state(v, build_hamiltonian(J, HamiltonianForm::Original), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_state(v, build_hamiltonian(HalfInt::from_twice(5), HamiltonianForm::RotatedTA), 0.0),
                  std::invalid_argument);
  const auto other = state_amplitudes(solve_sector(ModelConfig::make(HalfInt::from_twice(5), {2, 1, 0}))[0]);
  CHECK_THROWS_AS(overlap_matrix({v, other}), std::invalid_argument);
}
