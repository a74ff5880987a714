#pragma once

// Heine-Stieltjes polynomial coefficients from the three-term recurrence.
//
// Writing y_k(w) = sum_j b_j w^j, the Fuchsian equation reduces to
//   F b = g0 b
// with F tridiagonal. The off-diagonal products of F are positive in every
// sector, so F is similar to a symmetric tridiagonal matrix and g0 is real.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tacs/errors.hpp"
#include "tacs/model.hpp"
#include "tacs/tridiagonal.hpp"

namespace tacs {

/// Tridiagonal recurrence matrix, rows j = 0..k. Entries are kept in
/// extended precision.
struct RecurrenceMatrix {
  std::vector<long double> diag;  ///< F[j][j]
  std::vector<long double> lower; ///< lower[j-1] = F[j][j-1], j = 1..k
  std::vector<long double> upper; ///< upper[j-1] = F[j-1][j], j = 1..k

  int size() const { return static_cast<int>(diag.size()); }

  Eigen::MatrixXd dense() const {
    const int n = size();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j)
      m(j, j) = static_cast<double>(diag[j]);
    for (int j = 1; j < n; ++j) {
      m(j, j - 1) = static_cast<double>(lower[j - 1]);
      m(j - 1, j) = static_cast<double>(upper[j - 1]);
    }
    return m;
  }
};

inline RecurrenceMatrix build_tridiagonal(const ModelConfig &cfg) {
  using Real = long double;
  const int k = cfg.k();
  const Real J = cfg.j();
  const Real c1sq = static_cast<Real>(cfg.c1) * cfg.c1;
  const Real c2sq = static_cast<Real>(cfg.c2) * cfg.c2;
  const Real alpha = c1sq * (cfg.nu_a() - J + 1) + c2sq * (cfg.nu_b() - J + 1);
  const int nu = cfg.nu_a() + cfg.nu_b();

  RecurrenceMatrix f;
  f.diag.resize(k + 1);
  for (int j = 0; j <= k; ++j)
    f.diag[j] = j * ((c1sq + c2sq) * (j - 1) + alpha);
  for (int j = 1; j <= k; ++j) {
    f.lower.push_back(c1sq * (k + 1 - j) * (nu + k + j - J - 0.5L));
    f.upper.push_back((J - (j - 1) - 0.5L) * j);
  }
  return f;
}

/// One eigenpair of F: g0 and the coefficients b_0..b_k scaled so b_k = 1.
struct VanVleckPair {
  double g0 = 0.0;
  std::vector<double> coeffs;
  /// The same coefficients before rounding to double.
  std::vector<long double> coeffs_extended;
};

/// max_j |(F b - g0 b)_j| / ||b||, accumulated in extended precision.
template <typename T>
double recurrence_residual(const RecurrenceMatrix &f, long double g0, std::span<const T> b) {
  const int n = f.size();
  long double norm = 0.0L, worst = 0.0L;
  for (T x : b)
    norm += static_cast<long double>(x) * x;
  norm = std::sqrt(norm);
  for (int j = 0; j < n; ++j) {
    long double row = (f.diag[j] - g0) * static_cast<long double>(b[j]);
    if (j > 0)
      row += f.lower[j - 1] * static_cast<long double>(b[j - 1]);
    if (j + 1 < n)
      row += f.upper[j] * static_cast<long double>(b[j + 1]);
    worst = std::max(worst, std::abs(row));
  }
  return static_cast<double>(norm > 0 ? worst / norm : worst);
}

inline double recurrence_residual(const RecurrenceMatrix &f, double g0, const std::vector<double> &b) {
  return recurrence_residual<double>(f, g0, std::span<const double>(b));
}

namespace detail {

/// One step of inverse iteration on the unsymmetric tridiagonal F at shift
/// g0, in extended precision with partial pivoting. Returns the new vector
/// scaled so its last entry is 1, or an empty vector if that entry vanishes.
inline std::vector<long double> inverse_iteration_step(const RecurrenceMatrix &f, long double g0,
                                                       std::span<const long double> b) {
  using Real = long double;
  const int n = f.size();
  std::vector<Real> sub(n, 0), d(n), sup(n, 0), sup2(n, 0), rhs(b.begin(), b.end());
  Real fnorm = 0;
  for (int j = 0; j < n; ++j) {
    d[j] = f.diag[j] - g0;
    if (j > 0)
      sub[j] = f.lower[j - 1];
    if (j + 1 < n)
      sup[j] = f.upper[j];
    fnorm = std::max(fnorm, std::abs(d[j]) + std::abs(sub[j]) + std::abs(sup[j]));
  }
  const Real tiny = std::numeric_limits<Real>::epsilon() * std::max(fnorm, Real(1));
  // Gaussian elimination with row interchanges; after step j row j holds
  // d[j], sup[j], sup2[j].
  for (int j = 0; j + 1 < n; ++j) {
    if (std::abs(d[j]) >= std::abs(sub[j + 1])) {
      if (d[j] == 0)
        d[j] = tiny;
      const Real m = sub[j + 1] / d[j];
      d[j + 1] -= m * sup[j];
      rhs[j + 1] -= m * rhs[j];
    } else {
      const Real m = d[j] / sub[j + 1];
      std::swap(rhs[j], rhs[j + 1]);
      rhs[j + 1] -= m * rhs[j];
      const Real pivot = sub[j + 1], next_d = d[j + 1];
      const Real next_u = (j + 2 < n) ? sup[j + 1] : Real(0);
      d[j + 1] = sup[j] - m * next_d;
      if (j + 2 < n)
        sup[j + 1] = -m * next_u;
      d[j] = pivot;
      sup[j] = next_d;
      sup2[j] = next_u;
    }
    sub[j + 1] = 0;
  }
  if (d[n - 1] == 0)
    d[n - 1] = tiny;
  std::vector<Real> x(n);
  for (int j = n - 1; j >= 0; --j) {
    Real v = rhs[j];
    if (j + 1 < n)
      v -= sup[j] * x[j + 1];
    if (j + 2 < n)
      v -= sup2[j] * x[j + 2];
    x[j] = v / d[j];
  }
  const Real last = x[n - 1];
  if (!(std::abs(last) > 0) || !std::isfinite(static_cast<double>(last)))
    return {};
  for (Real &v : x)
    v /= last;
  x[n - 1] = 1;
  for (Real v : x)
    if (!std::isfinite(static_cast<double>(v)))
      return {};
  return x;
}

} // namespace detail

struct VanVleckOptions {
  double residual_tol = 1e-10; ///< per-row recurrence residual relative to ||b||
  /// |b_k| / ||b|| below which b_k is taken from inverse iteration on F
  /// instead of the rescaled symmetric eigenvector.
  double min_last_coeff = 1e-13;
  /// Adjacent g0 must differ by more than this times max(1, max|g0|). Integer-J
  /// sectors carry near-doublets whose splitting shrinks geometrically with J
  /// (relative 3e-16 at J = 20), so the bound sits at extended-precision
  /// resolution.
  double min_relative_gap = 1e-17;
  /// Inverse iteration is applied only to eigenvalues at least this far
  /// (relative) from their neighbours; near-doublets would be mixed.
  double isolation_gap = 1e-8;
};

/// Solves F b = g0 b for all k+1 eigenpairs, returned with ascending g0.
///
/// The diagonal similarity D^-1 F D with d_j / d_{j-1} = sqrt(lower_j / upper_j)
/// makes F symmetric; eigenvectors are mapped back with D. The scaling is
/// kept in log form since the coefficients span many decades for large k.
/// Mapping back amplifies absolute errors of small components of the
/// symmetric eigenvector, so isolated eigenvalues get one inverse-iteration
/// step on F itself.
inline std::vector<VanVleckPair> solve_vanvleck(const RecurrenceMatrix &f,
                                                const VanVleckOptions &opt = {}) {
  using Real = long double;
  const int n = f.size();
  std::vector<Real> log_d(n, 0.0L);
  std::vector<Real> diag(f.diag.begin(), f.diag.end());
  std::vector<Real> off(n > 0 ? n - 1 : 0);
  for (int j = 1; j < n; ++j) {
    const Real lo = f.lower[j - 1], up = f.upper[j - 1];
    if (!(lo * up > 0))
      throw SolverError("solve_vanvleck: off-diagonal product is not positive at row " +
                        std::to_string(j));
    log_d[j] = log_d[j - 1] + 0.5L * std::log(lo / up);
    off[j - 1] = std::copysign(std::sqrt(lo * up), lo);
  }
  const Real log_d_max = n ? *std::max_element(log_d.begin(), log_d.end()) : 0;

  auto eig = symmetric_tridiagonal_eigen<Real>(diag, off);

  Real gmax = 1.0;
  for (Real v : eig.values)
    gmax = std::max(gmax, std::abs(v));
  for (int i = 1; i < n; ++i)
    if (!(eig.values[i] - eig.values[i - 1] > opt.min_relative_gap * gmax))
      throw SolverError("solve_vanvleck: eigenvalues are not simple");

  std::vector<VanVleckPair> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Real g0 = eig.values[i];
    Real gap = INFINITY;
    if (i > 0)
      gap = std::min(gap, g0 - eig.values[i - 1]);
    if (i + 1 < n)
      gap = std::min(gap, eig.values[i + 1] - g0);
    const bool isolated = gap > opt.isolation_gap * gmax;

    std::vector<Real> b(n);
    Real norm = 0;
    for (int j = 0; j < n; ++j) {
      b[j] = std::exp(log_d[j] - log_d_max) * eig.vectors[i][j];
      norm += b[j] * b[j];
    }
    norm = std::sqrt(norm);
    const Real last = b[n - 1];
    if (isolated && !(std::abs(last) > opt.min_last_coeff * norm)) {
      b = detail::inverse_iteration_step(f, g0, b);
    } else if (last != 0) {
      for (Real &v : b)
        v /= last;
      b[n - 1] = 1;
    } else {
      b.clear();
    }
    if (b.empty())
      throw SolverError("solve_vanvleck: leading coefficient b_k is unresolved for g0 = " +
                        std::to_string(static_cast<double>(g0)));

    double res = recurrence_residual<Real>(f, g0, b);
    if (isolated && n > 1) {
      auto refined = detail::inverse_iteration_step(f, g0, b);
      if (!refined.empty()) {
        const double refined_res = recurrence_residual<Real>(f, g0, refined);
        if (refined_res < res) {
          b = std::move(refined);
          res = refined_res;
        }
      }
    }
    if (!(res <= opt.residual_tol))
      throw SolverError("solve_vanvleck: recurrence residual " + std::to_string(res) +
                        " exceeds tolerance");

    VanVleckPair p;
    p.g0 = static_cast<double>(g0);
    p.coeffs.assign(b.begin(), b.end());
    p.coeffs_extended = std::move(b);
    out.push_back(std::move(p));
  }
  return out;
}

/// Heine-Stieltjes polynomial for one level of a sector.
struct HSPolynomial {
  ModelConfig config;
  int zeta = 0;                ///< 1-based, ordered by energy within the sector
  std::vector<double> coeffs;  ///< b_0..b_k, b_k = 1
  double g0 = 0.0;
  /// Unrounded coefficients from the solver; empty when the polynomial was
  /// read back from a file. Used only where it agrees with `coeffs`.
  std::vector<long double> coeffs_extended;

  int degree() const { return config.k(); }
  double alpha() const { return config.alpha(); }

  /// V(w) = slope w + g0.
  double van_vleck(double w) const { return config.van_vleck_slope() * w + g0; }
};

/// |b0| / ||b|| below which the coefficient-ratio energy route is refused.
inline constexpr double kDegenerateB0 = 1e-12;

/// E/chi = (P/4)(-2 b1/b0 + c1^2 nu_a + c2^2 nu_b) - J(2J-1)/2.
///
/// Throws SolverError when b0 is numerically zero; callers then use the
/// sum over zeros instead.
inline double energy_from_coeffs(const ModelConfig &cfg, std::span<const double> b) {
  const double J = cfg.j();
  double pair_term = cfg.c1sq() * cfg.nu_a() + cfg.c2sq() * cfg.nu_b();
  if (b.size() > 1) {
    double norm = 0.0;
    for (double x : b)
      norm += x * x;
    norm = std::sqrt(norm);
    if (!(std::abs(b[0]) > kDegenerateB0 * norm))
      throw SolverError("energy_from_coeffs: b0 is numerically zero");
    pair_term += -2.0 * b[1] / b[0];
  }
  return 0.25 * cfg.energy_prefactor() * pair_term - 0.5 * J * (2.0 * J - 1.0);
}

} // namespace tacs
