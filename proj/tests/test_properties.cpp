#include "catch_amalgamated.hpp"

#include <cmath>
#include <cstring>
#include <random>

#include "tacs/io.hpp"
#include "tacs/verify.hpp"

using namespace tacs;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("spectral sums match the matrix") {
  const int t = GENERATE(range(0, 42));
  const auto J = HalfInt::from_twice(t);
  const auto s = solve_spectrum(J);
  const auto h = build_hamiltonian(J, HamiltonianForm::Original);
  double sum = 0.0, sum_sq = 0.0;
  for (double e : s.energies()) {
    sum += e;
    sum_sq += e * e;
  }
  const double frob = h.entries.squaredNorm();
  CHECK(static_cast<int>(s.levels.size()) == J.multiplicity());
  CHECK(std::abs(sum) < 1e-9 * std::max(1.0, std::sqrt(frob)));
  CHECK_THAT(sum_sq, WithinAbs(frob, 1e-9 * std::max(1.0, frob)));
}

TEST_CASE("integer-J sectors interleave the spectrum") {
  const int t = GENERATE(range(2, 42, 2));
  const auto J = HalfInt::from_twice(t);
  const auto s = solve_spectrum(J);
  const auto sectors = enumerate_sectors(J);
  CHECK(s.sector(sectors[0]).size() == static_cast<std::size_t>(t / 2 + 1));
  CHECK(s.sector(sectors[1]).size() == static_cast<std::size_t>(t / 2));
}

TEST_CASE("random real polynomials: zeros come in conjugate pairs and rebuild the coefficients") {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + trial % 9;
    std::vector<double> b(k + 1);
    for (double &x : b)
      x = coef(rng);
    b[k] = 1.0;
    auto w = companion_roots(b);
    for (auto &z : w)
      z = newton_polish<double>(b, z);
    CHECK(conjugate_closure_defect(w) < 1e-6);
    const auto s = elementary_symmetric(w);
    for (int q = 0; q <= k; ++q)
      CHECK_THAT(s[q].real(), WithinAbs((q % 2 ? -1.0 : 1.0) * b[k - q], 1e-7 * (1.0 + std::abs(b[k - q]))));
  }
}

TEST_CASE("random records round-trip through JSON") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> bits;
  auto random_double = [&] {
    double x;
    do {
      const std::uint64_t u = bits(rng);
      std::memcpy(&x, &u, sizeof x);
    } while (!std::isfinite(x));
    return x;
  };
  for (int trial = 0; trial < 50; ++trial) {
    SpectrumRecord r{HalfInt::from_twice(trial), {}};
    for (int i = 0; i < 3; ++i) {
      LevelRecord l{i + 1, trial / 2, 0, 1, random_double(), random_double(), {}, {}};
      for (int j = 0; j < 4; ++j) {
        l.coeffs.push_back(random_double());
        l.zeros.emplace_back(random_double(), random_double());
      }
      r.levels.push_back(l);
    }
    CHECK(parse_spectrum(serialize(r)) == r);
  }
}

TEST_CASE("energy scales linearly with chi") {
  const double chi = GENERATE(0.25, 2.0, 7.5);
  const auto J = HalfInt::from_twice(11);
  const auto base = diagonalize(build_hamiltonian(J, HamiltonianForm::Original));
  const auto scaled = diagonalize(build_hamiltonian(J, HamiltonianForm::Original, chi));
  for (Eigen::Index i = 0; i < base.energies.size(); ++i)
    CHECK_THAT(scaled.energies[i], WithinAbs(chi * base.energies[i], 1e-12 * chi * 40));
}
