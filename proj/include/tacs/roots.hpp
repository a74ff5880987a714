#pragma once

// Zeros of the Heine-Stieltjes polynomials and the checks built on them: the
// Bethe ansatz equations, the Fuchsian differential equation, and the
// location of |Re w| relative to the poles.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tacs/errors.hpp"
#include "tacs/hs_solver.hpp"

namespace tacs {

using cplx = std::complex<double>;

struct ZeroSet {
  std::vector<cplx> zeros;
  /// The zeros before rounding to double, when polished against the
  /// solver's unrounded coefficients; otherwise empty.
  std::vector<std::complex<long double>> zeros_extended;
  double bethe_residual = 0.0;
  HSPolynomial source;
};

namespace detail {

/// y(w), y'(w), y''(w) by Horner in extended precision.
struct PolyEval {
  std::complex<long double> y, dy, d2y;
  long double magnitude; ///< sum_j |b_j| |w|^j
};

template <typename T>
PolyEval eval_poly(std::span<const T> b, std::complex<long double> w) {
  PolyEval r{0, 0, 0, 0};
  const long double aw = std::abs(w);
  for (std::size_t i = b.size(); i-- > 0;) {
    r.d2y = r.d2y * w + 2.0L * r.dy;
    r.dy = r.dy * w + r.y;
    r.y = r.y * w + static_cast<long double>(b[i]);
    r.magnitude = r.magnitude * aw + std::abs(static_cast<long double>(b[i]));
  }
  return r;
}

/// In-place diagonal similarity balancing with radix 2.
inline void balance(Eigen::MatrixXd &a) {
  constexpr double radix = 2.0, sqrdx = radix * radix;
  const Eigen::Index n = a.rows();
  bool done = false;
  for (int sweep = 0; !done && sweep < 200; ++sweep) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i)
          continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0)
        continue;
      double g = r / radix, f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

} // namespace detail

/// Eigenvalues of the balanced companion matrix of a polynomial with real
/// coefficients b_0..b_k (b_k != 0), without polishing.
inline std::vector<cplx> companion_roots(std::span<const double> b) {
  const int k = static_cast<int>(b.size()) - 1;
  if (k <= 0)
    return {};
  const double lead = b[k];
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(k, k);
  for (int j = 0; j < k; ++j)
    comp(0, j) = -b[k - 1 - j] / lead;
  for (int i = 1; i < k; ++i)
    comp(i, i - 1) = 1.0;
  detail::balance(comp);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw SolverError("companion_roots: eigenvalue iteration did not converge");
  std::vector<cplx> out(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
  return out;
}

/// Newton iterations on y(w) until the step stalls.
template <typename T>
std::complex<long double> newton_polish_extended(std::span<const T> b, cplx w0,
                                                 int max_iter = 12) {
  std::complex<long double> w(w0.real(), w0.imag());
  auto cur = detail::eval_poly<T>(b, w);
  for (int it = 0; it < max_iter; ++it) {
    if (cur.y == std::complex<long double>(0) || cur.dy == std::complex<long double>(0))
      break;
    const auto step = cur.y / cur.dy;
    const auto next_w = w - step;
    const auto next = detail::eval_poly<T>(b, next_w);
    if (!(std::abs(next.y) < std::abs(cur.y)))
      break;
    w = next_w;
    cur = next;
    if (std::abs(step) <= 4 * std::numeric_limits<T>::epsilon() * std::abs(w))
      break;
  }
  return w;
}

template <typename T>
cplx newton_polish(std::span<const T> b, cplx w0, int max_iter = 12) {
  const auto w = newton_polish_extended<T>(b, w0, max_iter);
  return {static_cast<double>(w.real()), static_cast<double>(w.imag())};
}

/// Largest relative distance between a zero and the conjugate of its partner.
/// Zeros with negligible imaginary part are their own partner.
inline double conjugate_closure_defect(std::span<const cplx> zeros, double real_tol = 1e-8) {
  const std::size_t n = zeros.size();
  std::vector<bool> used(n, false);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i])
      continue;
    used[i] = true;
    const double scale = std::max(1.0, std::abs(zeros[i]));
    if (std::abs(zeros[i].imag()) <= real_tol * scale)
      continue;
    std::size_t best = n;
    double best_d = INFINITY;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j])
        continue;
      const double d = std::abs(zeros[j] - std::conj(zeros[i]));
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best == n)
      return INFINITY;
    used[best] = true;
    worst = std::max(worst, best_d / scale);
  }
  return worst;
}

/// Smallest pairwise distance between zeros (infinity for fewer than two).
inline double min_zero_gap(std::span<const cplx> zeros) {
  double gap = INFINITY;
  for (std::size_t i = 0; i < zeros.size(); ++i)
    for (std::size_t j = i + 1; j < zeros.size(); ++j)
      gap = std::min(gap, std::abs(zeros[i] - zeros[j]));
  return gap;
}

/// Poles of the Fuchsian equation on the real axis: 0, 1/c2^2, 1/c1^2.
inline std::array<double, 3> fuchsian_poles(const ModelConfig &cfg) {
  return {0.0, 1.0 / cfg.c2sq(), 1.0 / cfg.c1sq()};
}

namespace detail {

template <typename Real>
double bethe_residual(std::span<const std::complex<Real>> w, const ModelConfig &cfg) {
  using Z = std::complex<Real>;
  const Real c1 = cfg.c1, c2 = cfg.c2;
  const Real c1sq = c1 * c1, c2sq = c2 * c2;
  const Real a_term = (cfg.nu_a() + Real(0.5)) * c1sq;
  const Real b_term = (cfg.nu_b() + Real(0.5)) * c2sq;
  const Real origin = Real(0.5) + 6 * c1 * c2 * Real(cfg.j()) / (c1sq + c2sq);
  Real worst = 0;
  for (std::size_t l = 0; l < w.size(); ++l) {
    Z s = a_term / (Real(1) - c1sq * w[l]) + b_term / (Real(1) - c2sq * w[l]) - origin / w[l];
    for (std::size_t j = 0; j < w.size(); ++j)
      if (j != l)
        s -= Real(2) / (w[l] - w[j]);
    worst = std::max(worst, std::abs(s));
  }
  return static_cast<double>(worst);
}

} // namespace detail

/// max_l |Bethe equation l| for the given zeros. Unnormalized.
inline double bethe_residual(std::span<const cplx> w, const ModelConfig &cfg) {
  if (min_zero_gap(w) <= 1e-12)
    throw SolverError("bethe_residual: degenerate roots (coincident zeros)");
  return detail::bethe_residual<double>(w, cfg);
}

/// As above, evaluated on extended-precision zeros.
inline double bethe_residual(std::span<const std::complex<long double>> w, const ModelConfig &cfg) {
  std::vector<cplx> rounded(w.begin(), w.end());
  if (min_zero_gap(rounded) <= 1e-12)
    throw SolverError("bethe_residual: degenerate roots (coincident zeros)");
  return detail::bethe_residual<long double>(w, cfg);
}

struct ZeroOptions {
  double value_tol = 1e-8;   ///< |y(w)| relative to sum |b_j||w|^j
  double conjugate_tol = 1e-8;
  double pole_tol = 1e-10;
};

/// All k zeros of y_k, polished by Newton on y_k and checked for accuracy,
/// conjugate closure and distance from the poles. Fills the Bethe residual.
inline ZeroSet polynomial_zeros(const HSPolynomial &p, const ZeroOptions &opt = {}) {
  ZeroSet out;
  out.source = p;
  const auto &b = p.coeffs;
  if (p.degree() == 0)
    return out;

  const auto &ext = p.coeffs_extended;
  bool use_ext = ext.size() == b.size();
  for (std::size_t j = 0; use_ext && j < b.size(); ++j)
    use_ext = static_cast<double>(ext[j]) == b[j];

  std::vector<std::complex<long double>> polished_ext;
  for (cplx w : companion_roots(b)) {
    const auto w_ext = use_ext ? newton_polish_extended<long double>(ext, w)
                               : newton_polish_extended<double>(b, w);
    const cplx polished(static_cast<double>(w_ext.real()), static_cast<double>(w_ext.imag()));
    const auto ev = detail::eval_poly<double>(b, {polished.real(), polished.imag()});
    if (!(std::abs(ev.y) <= opt.value_tol * ev.magnitude))
      throw SolverError("polynomial_zeros: zero did not converge for sector " +
                        p.config.sector.str() + " zeta=" + std::to_string(p.zeta));
    out.zeros.push_back(polished);
    polished_ext.push_back(w_ext);
  }

  const double conj = conjugate_closure_defect(out.zeros, opt.conjugate_tol);
  if (!(conj <= opt.conjugate_tol))
    throw InvariantViolation("conjugate-closure", "sector " + p.config.sector.str() +
                                                      " zeta=" + std::to_string(p.zeta));
  for (cplx w : out.zeros)
    for (double pole : fuchsian_poles(p.config))
      if (std::abs(w - pole) <= opt.pole_tol)
        throw InvariantViolation("pole-avoidance", "zero at pole " + std::to_string(pole));

  std::vector<std::size_t> order(out.zeros.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const cplx a = out.zeros[i], b = out.zeros[j];
    return std::abs(a.real()) != std::abs(b.real()) ? std::abs(a.real()) < std::abs(b.real())
                                                    : a.imag() < b.imag();
  });
  std::vector<cplx> sorted;
  for (std::size_t i : order) {
    sorted.push_back(out.zeros[i]);
    if (use_ext)
      out.zeros_extended.push_back(polished_ext[i]);
  }
  out.zeros = std::move(sorted);
  out.bethe_residual = use_ext ? bethe_residual(std::span<const std::complex<long double>>(out.zeros_extended), p.config)
                               : bethe_residual(out.zeros, p.config);
  return out;
}

/// Residual of the Fuchsian equation multiplied through by
/// w (1 - c1^2 w)(1 - c2^2 w), sampled on 64 points of |w| = 2 and
/// normalized by the largest sampled term.
inline double fuchsian_residual(const HSPolynomial &p) {
  const auto &cfg = p.config;
  const double c1sq = cfg.c1sq(), c2sq = cfg.c2sq();
  const double ea = cfg.nu_a() + 0.5, eb = cfg.nu_b() + 0.5, g = cfg.gamma_J();
  constexpr int samples = 64;
  constexpr double radius = 2.0;
  double worst = 0.0, scale = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double theta = 2.0 * std::numbers::pi * (i + 0.5) / samples;
    const cplx w = std::polar(radius, theta);
    bool near_pole = false;
    for (double pole : fuchsian_poles(cfg))
      near_pole |= std::abs(w - pole) < 1e-3;
    if (near_pole)
      continue;
    const auto ev = detail::eval_poly<double>(p.coeffs, {w.real(), w.imag()});
    const cplx y(static_cast<double>(ev.y.real()), static_cast<double>(ev.y.imag()));
    const cplx dy(static_cast<double>(ev.dy.real()), static_cast<double>(ev.dy.imag()));
    const cplx d2y(static_cast<double>(ev.d2y.real()), static_cast<double>(ev.d2y.imag()));
    const cplx qa = 1.0 - c1sq * w, qb = 1.0 - c2sq * w;
    const cplx t1 = w * qa * qb * d2y;
    const cplx t2 = (-ea * c1sq * w * qb - eb * c2sq * w * qa + g * qa * qb) * dy;
    const cplx t3 = (cfg.van_vleck_slope() * w + p.g0) * y;
    worst = std::max(worst, std::abs(t1 + t2 + t3));
    scale = std::max({scale, std::abs(t1), std::abs(t2), std::abs(t3)});
  }
  return scale > 0 ? worst / scale : worst;
}

/// Counts of zeros with |Re w| below and above the middle pole.
struct ZeroSplit {
  int inner = 0; ///< |Re w| in (0, min pole)
  int outer = 0; ///< |Re w| in (min pole, max pole)
  auto operator<=>(const ZeroSplit &) const = default;
};

inline ZeroSplit classify_zeros(const ZeroSet &z, double slack = 1e-8) {
  const auto poles = fuchsian_poles(z.source.config);
  const double lo = std::min(poles[1], poles[2]);
  const double hi = std::max(poles[1], poles[2]);
  ZeroSplit split;
  for (cplx w : z.zeros) {
    const double x = std::abs(w.real());
    if (x > hi + slack)
      throw InvariantViolation("zero-interval", "|Re w| = " + std::to_string(x) +
                                                    " outside (0," + std::to_string(hi) + ")");
    if (x < lo)
      ++split.inner;
    else
      ++split.outer;
  }
  return split;
}

struct ZeroEnergy {
  double value = 0.0;
  double imag = 0.0; ///< imaginary part of the zero sum; vanishes for conjugate-closed sets
};

/// E/chi = (P/4)(sum_l 2/w_l + c1^2 nu_a + c2^2 nu_b) - J(2J-1)/2.
inline ZeroEnergy energy_from_zeros(const ModelConfig &cfg, std::span<const cplx> zeros) {
  cplx sum = 0.0;
  for (cplx w : zeros)
    sum += 2.0 / w;
  const double J = cfg.j();
  const double lin = cfg.c1sq() * cfg.nu_a() + cfg.c2sq() * cfg.nu_b();
  return {0.25 * cfg.energy_prefactor() * (sum.real() + lin) - 0.5 * J * (2.0 * J - 1.0),
          std::abs(0.25 * cfg.energy_prefactor() * sum.imag())};
}

/// Elementary symmetric functions S_0..S_k of the zeros.
inline std::vector<cplx> elementary_symmetric(std::span<const cplx> zeros) {
  std::vector<cplx> s(zeros.size() + 1, 0.0);
  s[0] = 1.0;
  for (std::size_t i = 0; i < zeros.size(); ++i)
    for (std::size_t q = i + 1; q >= 1; --q)
      s[q] += zeros[i] * s[q - 1];
  return s;
}

} // namespace tacs
