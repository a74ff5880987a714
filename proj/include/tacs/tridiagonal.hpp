#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "tacs/errors.hpp"

namespace tacs {

/// Eigenpairs of a real symmetric tridiagonal matrix.
template <typename Real>
struct SymmetricTridiagonalEigen {
  std::vector<Real> values;               ///< ascending
  std::vector<std::vector<Real>> vectors; ///< vectors[i] pairs with values[i], unit norm
};

/// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.
///
/// `diag` has n entries and `off` has n-1 entries, off[i] coupling rows i and
/// i+1. Throws SolverError if some eigenvalue needs more than `max_sweeps`
/// QL sweeps.
template <typename Real>
SymmetricTridiagonalEigen<Real> symmetric_tridiagonal_eigen(std::vector<Real> diag,
                                                            const std::vector<Real> &off,
                                                            int max_sweeps = 60) {
  using std::abs;
  using std::hypot;
  const int n = static_cast<int>(diag.size());
  std::vector<Real> e(n, Real(0));
  for (int i = 0; i + 1 < n; ++i)
    e[i] = off[i];

  // z is column-major: z[col][row]; column j accumulates the j-th eigenvector.
  std::vector<std::vector<Real>> z(n, std::vector<Real>(n, Real(0)));
  for (int i = 0; i < n; ++i)
    z[i][i] = Real(1);

  const Real eps = std::numeric_limits<Real>::epsilon();
  auto &d = diag;
  for (int l = 0; l < n; ++l) {
    int sweeps = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const Real dd = abs(d[m]) + abs(d[m + 1]);
        if (abs(e[m]) <= eps * dd)
          break;
      }
      if (m == l)
        break;
      if (sweeps++ == max_sweeps)
        throw SolverError("symmetric_tridiagonal_eigen: QL iteration did not converge");

      Real g = (d[l + 1] - d[l]) / (Real(2) * e[l]);
      Real r = hypot(g, Real(1));
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      Real s = 1, c = 1, p = 0;
      int i = m - 1;
      bool underflow = false;
      for (; i >= l; --i) {
        Real f = s * e[i];
        const Real b = c * e[i];
        r = hypot(f, g);
        e[i + 1] = r;
        if (r == Real(0)) {
          d[i + 1] -= p;
          e[m] = 0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + Real(2) * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        auto &zi = z[i];
        auto &zi1 = z[i + 1];
        for (int row = 0; row < n; ++row) {
          f = zi1[row];
          zi1[row] = s * zi[row] + c * f;
          zi[row] = c * zi[row] - s * f;
        }
      }
      if (underflow)
        continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0;
    } while (m != l);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

  SymmetricTridiagonalEigen<Real> out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (int idx : order) {
    out.values.push_back(d[idx]);
    out.vectors.push_back(std::move(z[idx]));
  }
  return out;
}

} // namespace tacs
