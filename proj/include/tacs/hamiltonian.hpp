#pragma once

// Matrix form of the two-axis countertwisting Hamiltonian in the |J,M> basis,
// and a dense Hermitian diagonalization used as the reference spectrum.

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "tacs/errors.hpp"
#include "tacs/halfint.hpp"

namespace tacs {

enum class HamiltonianForm {
  Original,  ///< chi (Jx Jy + Jy Jx)
  RotatedTA, ///< chi (Jx''^2 - Jz''^2) after the two Euler rotations
};

/// Dense Hamiltonian matrix. Rows and columns run over M = J, J-1, ..., -J.
struct OperatorMatrix {
  HalfInt J;
  HamiltonianForm form = HamiltonianForm::Original;
  Eigen::MatrixXcd entries;

  int dim() const { return static_cast<int>(entries.rows()); }
};

struct OracleSpectrum {
  Eigen::VectorXd energies;      ///< ascending
  Eigen::MatrixXcd eigenvectors; ///< column i belongs to energies[i]
};

/// Basis index of magnetic quantum number M (descending order).
constexpr int basis_index(HalfInt J, HalfInt M) { return (J.twice() - M.twice()) / 2; }

/// Magnetic quantum number of basis index i.
constexpr HalfInt basis_m(HalfInt J, int i) { return HalfInt::from_twice(J.twice() - 2 * i); }

/// <M+1| J+ |M> for the standard Condon-Shortley phase convention.
inline double raising_element(HalfInt J, HalfInt M) {
  const double j = J.value(), m = M.value();
  return std::sqrt(std::max(0.0, j * (j + 1.0) - m * (m + 1.0)));
}

/// Real matrix of J+ in the descending-M basis.
inline Eigen::MatrixXd raising_matrix(HalfInt J) {
  if (J.twice() < 0)
    throw std::invalid_argument("J must be non-negative, got 2J=" + std::to_string(J.twice()));
  const int n = J.multiplicity();
  Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i)
    jp(i - 1, i) = raising_element(J, basis_m(J, i));
  return jp;
}

inline OperatorMatrix build_hamiltonian(HalfInt J, HamiltonianForm form, double chi = 1.0) {
  const Eigen::MatrixXd jp = raising_matrix(J);
  const Eigen::MatrixXd jp2 = jp * jp;
  const Eigen::MatrixXd jm2 = jp2.transpose();
  const int n = J.multiplicity();

  OperatorMatrix h{J, form, Eigen::MatrixXcd::Zero(n, n)};
  if (form == HamiltonianForm::Original) {
    // (J+^2 - J-^2) / (2i)
    const std::complex<double> factor(0.0, -0.5 * chi);
    h.entries = factor * (jp2 - jm2).cast<std::complex<double>>();
  } else {
    const double j = J.value();
    Eigen::MatrixXd real = 0.25 * chi * (jp2 + jm2);
    for (int i = 0; i < n; ++i) {
      const double m = basis_m(J, i).value();
      real(i, i) = chi * (0.5 * j * (j + 1.0) - 1.5 * m * m);
    }
    h.entries = real.cast<std::complex<double>>();
  }
  return h;
}

/// Largest entry magnitude, floored at 1.
inline double matrix_scale(const Eigen::MatrixXcd &m) {
  return std::max(1.0, m.size() ? m.cwiseAbs().maxCoeff() : 0.0);
}

inline OracleSpectrum diagonalize(const OperatorMatrix &h, double hermiticity_tol = 1e-12) {
  const auto &a = h.entries;
  if (a.rows() != a.cols())
    throw std::invalid_argument("diagonalize: matrix is not square");
  const double scale = matrix_scale(a);
  const double defect = a.size() ? (a - a.adjoint()).cwiseAbs().maxCoeff() : 0.0;
  if (defect > hermiticity_tol * scale)
    throw std::invalid_argument("diagonalize: matrix is not Hermitian (defect " +
                                std::to_string(defect) + ")");

  OracleSpectrum out;
  if (a.size() == 0)
    return out;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a);
  if (solver.info() != Eigen::Success)
    throw SolverError("diagonalize: Hermitian eigensolver did not converge");
  out.energies = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  return out;
}

/// Max over columns of ||H v - E v|| / max(1, max|E|).
inline double oracle_residual(const OperatorMatrix &h, const OracleSpectrum &s) {
  if (s.energies.size() == 0)
    return 0.0;
  const double scale = std::max(1.0, s.energies.cwiseAbs().maxCoeff());
  double worst = 0.0;
  for (Eigen::Index i = 0; i < s.energies.size(); ++i) {
    const Eigen::VectorXcd v = s.eigenvectors.col(i);
    worst = std::max(worst, (h.entries * v - s.energies[i] * v).norm() / scale);
  }
  return worst;
}

/// max(1, max|E|) over a list of energies.
inline double energy_scale(std::span<const double> e) {
  double s = 1.0;
  for (double x : e)
    s = std::max(s, std::abs(x));
  return s;
}

/// Compares two energy multisets after sorting.
inline bool spectra_equivalent(std::span<const double> a, std::span<const double> b, double tol) {
  if (a.size() != b.size())
    throw std::invalid_argument("spectra_equivalent: dimension mismatch");
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double scale = std::max(energy_scale(x), energy_scale(y));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::abs(x[i] - y[i]) > tol * scale)
      return false;
  return true;
}

inline std::vector<double> to_vector(const Eigen::VectorXd &v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

inline bool spectra_equivalent(const OracleSpectrum &a, const OracleSpectrum &b, double tol) {
  return spectra_equivalent(to_vector(a.energies), to_vector(b.energies), tol);
}

/// The energies negated and re-sorted; H -> -H under a quarter turn about z.
inline std::vector<double> negated(std::span<const double> e) {
  std::vector<double> out;
  out.reserve(e.size());
  for (double x : e)
    out.push_back(-x);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace tacs
