#pragma once

// Normalized eigenvectors in the |J,M> basis of the rotated Hamiltonian,
// built from the Heine-Stieltjes coefficients.
//
// The Bethe state expands as sum_rho B_rho c1^rho a+^(2k-2rho) b+^(2rho) on
// the seniority vacuum, so the |J,M> amplitude picks up sqrt(n_a! n_b!) from
// the boson normalization.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "tacs/hamiltonian.hpp"
#include "tacs/spectrum.hpp"

namespace tacs {

struct StateVector {
  HalfInt J;
  Sector sector;
  int zeta = 0;
  std::vector<double> amplitudes; ///< indexed by basis_index(J, M), unit norm

  Eigen::VectorXd vector() const {
    return Eigen::Map<const Eigen::VectorXd>(amplitudes.data(),
                                             static_cast<Eigen::Index>(amplitudes.size()));
  }
};

inline double binomial(int n, int r) {
  if (r < 0 || r > n)
    return 0.0;
  r = std::min(r, n - r);
  double c = 1.0;
  for (int i = 1; i <= r; ++i)
    c = c * (n - r + i) / i;
  return c;
}

/// B_rho = sum_q (-1)^q S_q sum_mu C(k-q, mu) C(q, rho-mu) c1^(-2 mu), with the
/// symmetric functions read off the coefficients as S_q = (-1)^q b_{k-q}.
inline std::vector<double> b_rho_coeffs(const HSPolynomial &p) {
  const int k = p.degree();
  const double inv_c1sq = 1.0 / p.config.c1sq();
  std::vector<double> s(k + 1);
  for (int q = 0; q <= k; ++q)
    s[q] = ((q % 2) ? -1.0 : 1.0) * p.coeffs[k - q];

  std::vector<double> out(k + 1, 0.0);
  for (int rho = 0; rho <= k; ++rho) {
    double total = 0.0;
    for (int q = 0; q <= k; ++q) {
      double inner = 0.0;
      for (int mu = std::max(0, rho - q); mu <= std::min(rho, k - q); ++mu)
        inner += binomial(k - q, mu) * binomial(q, rho - mu) * std::pow(inv_c1sq, mu);
      total += ((q % 2) ? -1.0 : 1.0) * s[q] * inner;
    }
    out[rho] = total;
  }
  return out;
}

/// Boson occupations (n_a, n_b) of term rho in a sector.
inline std::pair<int, int> boson_occupations(const Sector &s, int rho) {
  return {2 * s.k - 2 * rho + s.nu_a, 2 * rho + s.nu_b};
}

inline StateVector state_amplitudes(const Level &level) {
  const auto &cfg = level.config;
  const HalfInt J = cfg.J;
  const int k = cfg.k();
  const auto b_rho = b_rho_coeffs(level.polynomial);
  const double log_c1 = std::log(std::abs(cfg.c1));
  const bool c1_negative = cfg.c1 < 0;

  // Accumulate |amplitude| in log space, then rescale by the largest one.
  std::vector<double> log_mag(k + 1), sign(k + 1);
  std::vector<int> index(k + 1);
  double log_max = -INFINITY;
  for (int rho = 0; rho <= k; ++rho) {
    const auto [na, nb] = boson_occupations(cfg.sector, rho);
    index[rho] = basis_index(J, HalfInt::from_twice(na - nb));
    const double mag = std::abs(b_rho[rho]);
    log_mag[rho] = (mag > 0 ? std::log(mag) : -INFINITY) + rho * log_c1 +
                   0.5 * (std::lgamma(na + 1.0) + std::lgamma(nb + 1.0));
    sign[rho] = (b_rho[rho] < 0) != (c1_negative && rho % 2) ? -1.0 : 1.0;
    log_max = std::max(log_max, log_mag[rho]);
  }
  if (!std::isfinite(log_max))
    throw SolverError("state_amplitudes: zero-norm state for sector " + cfg.sector.str());

  StateVector v{J, cfg.sector, level.zeta, std::vector<double>(J.multiplicity(), 0.0)};
  double norm = 0.0;
  for (int rho = 0; rho <= k; ++rho) {
    const double a = sign[rho] * std::exp(log_mag[rho] - log_max);
    v.amplitudes[index[rho]] = a;
    norm += a * a;
  }
  norm = std::sqrt(norm);

  auto largest = std::max_element(v.amplitudes.begin(), v.amplitudes.end(),
                                  [](double a, double b) { return std::abs(a) < std::abs(b); });
  const double phase = *largest < 0 ? -1.0 : 1.0;
  for (double &a : v.amplitudes)
    a *= phase / norm;
  return v;
}

/// ||H v - E v|| / max(1, |E|) against the rotated Hamiltonian.
inline double verify_state(const StateVector &v, const OperatorMatrix &h, double energy) {
  if (h.form != HamiltonianForm::RotatedTA)
    throw std::invalid_argument("verify_state: expansion lives in the rotated frame");
  if (h.dim() != static_cast<int>(v.amplitudes.size()))
    throw std::invalid_argument("verify_state: dimension mismatch");
  const Eigen::VectorXcd x = v.vector().cast<std::complex<double>>();
  return (h.entries * x - energy * x).norm() / std::max(1.0, std::abs(energy));
}

/// Gram matrix of a set of states sharing J.
inline Eigen::MatrixXd overlap_matrix(const std::vector<StateVector> &states) {
  const auto n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (states[i].J != states[0].J)
      throw std::invalid_argument("overlap_matrix: states have different J");
    for (Eigen::Index j = 0; j <= i; ++j)
      g(i, j) = g(j, i) = states[i].vector().dot(states[j].vector());
  }
  return g;
}

/// Norm of the projection of v onto the oracle eigenspace at `energy`
/// (eigenvalues within tol * scale). Equals 1 when v lies in that eigenspace,
/// whether the space is one-dimensional or a degenerate doublet.
inline double oracle_subspace_overlap(const StateVector &v, const OracleSpectrum &oracle,
                                      double energy, double tol = 1e-8) {
  const double scale = std::max(1.0, oracle.energies.cwiseAbs().maxCoeff());
  const Eigen::VectorXcd x = v.vector().cast<std::complex<double>>();
  double sq = 0.0;
  for (Eigen::Index i = 0; i < oracle.energies.size(); ++i)
    if (std::abs(oracle.energies[i] - energy) <= tol * scale)
      sq += std::norm(oracle.eigenvectors.col(i).dot(x));
  return std::sqrt(sq);
}

} // namespace tacs
