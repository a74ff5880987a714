#pragma once

// Per-J invariant checks shared by the `verify` command and the test suites.

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <string>
#include <vector>

#include "tacs/bands.hpp"
#include "tacs/eigenstates.hpp"
#include "tacs/hamiltonian.hpp"
#include "tacs/roots.hpp"
#include "tacs/spectrum.hpp"

namespace tacs {

struct CheckResult {
  std::string name;
  HalfInt J;
  bool passed = false;
  double value = 0.0;     ///< measured quantity
  double threshold = 0.0; ///< pass iff value < threshold (or the check's own rule)
  std::string detail;
};

struct VerifyOptions {
  double tol = 1e-8;             ///< energy / state tolerance relative to scale
  double recurrence_tol = 1e-10; ///< per-row recurrence residual over ||b||
  double bethe_tol = 1e-6;
  double symmetric_tol = 1e-6;   ///< S_q against (-1)^q b_{k-q}, relative
  double fuchsian_tol = 1e-10;
  double trace_tol = 1e-12;
  /// Test hook: perturb b_0 of the lowest level before checking.
  bool inject_corruption = false;
};

namespace detail {

inline CheckResult make_check(std::string name, HalfInt J, double value, double threshold,
                              std::string detail = {}) {
  return {std::move(name), J, value < threshold, value, threshold, std::move(detail)};
}

/// |S_q - (-1)^q b_{k-q}| over the natural size of S_q, the same symmetric
/// function of |w_l|; this is the scale at which S_q is determined by the zeros.
inline double symmetric_function_defect(const ZeroSet &z) {
  const auto s = elementary_symmetric(z.zeros);
  std::vector<cplx> mags;
  for (cplx w : z.zeros)
    mags.push_back(std::abs(w));
  const auto s_abs = elementary_symmetric(mags);
  const auto &b = z.source.coeffs;
  const int k = static_cast<int>(z.zeros.size());
  double worst = 0.0;
  for (int q = 0; q <= k; ++q) {
    const double expected = ((q % 2) ? -1.0 : 1.0) * b[k - q];
    const double denom = std::max(std::abs(expected), s_abs[q].real());
    worst = std::max(worst, std::abs(s[q] - expected) / denom);
  }
  return worst;
}

} // namespace detail

/// Runs every invariant check for one J. Never throws for computational
/// failures; they are reported as failed checks.
inline std::vector<CheckResult> verify_j(HalfInt J, const VerifyOptions &opt = {}) {
  using detail::make_check;
  std::vector<CheckResult> out;
  auto fail = [&](const std::string &name, const std::string &why) {
    out.push_back({name, J, false, INFINITY, 0.0, why});
  };

  Spectrum spec;
  try {
    spec = solve_spectrum(J);
  } catch (const std::exception &e) {
    fail("solve", e.what());
    return out;
  }
  if (opt.inject_corruption && !spec.levels.empty())
    spec.levels.front().polynomial.coeffs.front() *= 1.0 + 1e-3;

  const auto e = spec.energies();
  const double scale = energy_scale(e);
  out.push_back(make_check("completeness", J, std::abs(double(e.size()) - J.multiplicity()), 0.5));

  // Constants: the constraint on (c1, c2) and the closed form of the prefactor.
  double constants = 0.0;
  for (const Level &l : spec.levels) {
    const auto [da, db] = l.config.constraint_defects();
    const double closed = (3.0 + 2.0 * std::numbers::sqrt2) * (2.0 * J.value() - 1.0);
    constants = std::max({constants, std::abs(da), std::abs(db),
                          std::abs(l.config.energy_prefactor() - closed) / std::max(1.0, std::abs(closed))});
  }
  out.push_back(make_check("constants", J, constants, 1e-10));

  // Oracle and the two Hamiltonian forms.
  const auto h_orig = build_hamiltonian(J, HamiltonianForm::Original);
  const auto h_rot = build_hamiltonian(J, HamiltonianForm::RotatedTA);
  OracleSpectrum orc_orig, orc_rot;
  try {
    orc_orig = diagonalize(h_orig);
    orc_rot = diagonalize(h_rot);
  } catch (const std::exception &ex) {
    fail("oracle", ex.what());
    return out;
  }
  auto max_sorted_gap = [](std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double g = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
      g = std::max(g, std::abs(a[i] - b[i]));
    return a.size() == b.size() ? g : INFINITY;
  };
  const auto oe = to_vector(orc_orig.energies);
  out.push_back(make_check("oracle-equivalence", J, max_sorted_gap(e, oe) / scale, opt.tol));
  out.push_back(make_check("euler-equivalence", J,
                           max_sorted_gap(oe, to_vector(orc_rot.energies)) / scale, opt.tol));
  out.push_back(make_check("trace", J,
                           std::max(std::abs(h_orig.entries.trace()), std::abs(h_rot.entries.trace())) /
                               scale,
                           opt.trace_tol));

  const auto mirror = check_mirror_symmetry(spec, opt.tol);
  out.push_back(make_check("mirror-symmetry", J, mirror.defect / mirror.scale, opt.tol));

  if (J.is_half_integer()) {
    try {
      pair_degeneracies(spec, opt.tol);
      out.push_back(make_check("degeneracy", J, 0.0, opt.tol));
    } catch (const InvariantViolation &ex) {
      fail("degeneracy", ex.what());
    }
    const auto secs = enumerate_sectors(J);
    const auto sa = spec.sector(secs[0]), sb = spec.sector(secs[1]);
    double swap = sa.size() == sb.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < std::min(sa.size(), sb.size()); ++i)
      swap = std::max(swap, std::abs(sa[i]->energy_over_chi - sb[i]->energy_over_chi) / scale);
    out.push_back(make_check("sector-swap", J, swap, opt.tol));

    const int k = secs[0].k;
    const bool has_zero = std::any_of(e.begin(), e.end(),
                                      [&](double x) { return std::abs(x) < opt.tol * scale; });
    const bool want_zero = k % 2 == 0;
    out.push_back({"zero-energy-rule", J, has_zero == want_zero, has_zero ? 1.0 : 0.0,
                   want_zero ? 1.0 : 0.0, "k=" + std::to_string(k)});
    const int neg = count_negative_distinct(spec, opt.tol);
    out.push_back({"negative-level-count", J, neg == expected_negative_doublets(k), double(neg),
                   double(expected_negative_doublets(k)), "k=" + std::to_string(k)});
  }

  // Per-level checks.
  double rec = 0.0, routes = 0.0, imag = 0.0, bethe = 0.0, sym = 0.0, fuchs = 0.0;
  double state_res = 0.0, omega_dev = 0.0;
  bool zeros_ok = true;
  std::string zero_detail;
  for (const auto &lv : spec.levels) {
    const auto &p = lv.polynomial;
    rec = std::max(rec, recurrence_residual(build_tridiagonal(lv.config), p.g0, p.coeffs));
    fuchs = std::max(fuchs, fuchsian_residual(p));
    omega_dev = std::max(omega_dev,
                         std::abs(band_energy_from_omega(lv.config, omega(lv)) - lv.energy_over_chi) /
                             scale);
    if (p.degree() > 0) {
      try {
        const auto z = polynomial_zeros(p);
        classify_zeros(z);
        bethe = std::max(bethe, z.bethe_residual);
        const auto ez = energy_from_zeros(lv.config, z.zeros);
        routes = std::max(routes, std::abs(ez.value - lv.energy_over_chi) / scale);
        imag = std::max(imag, ez.imag);
        sym = std::max(sym, detail::symmetric_function_defect(z));
      } catch (const std::exception &ex) {
        zeros_ok = false;
        zero_detail = ex.what();
      }
    }
    try {
      state_res = std::max(state_res, verify_state(state_amplitudes(lv), h_rot, lv.energy_over_chi));
    } catch (const std::exception &ex) {
      state_res = INFINITY;
    }
  }
  out.push_back(make_check("recurrence-residual", J, rec, opt.recurrence_tol));
  out.push_back(make_check("fuchsian-residual", J, fuchs, opt.fuchsian_tol));
  out.push_back(make_check("omega-identity", J, omega_dev, opt.tol));
  if (zeros_ok) {
    out.push_back(make_check("bethe-residual", J, bethe, opt.bethe_tol));
    out.push_back(make_check("energy-routes", J, routes, opt.tol));
    out.push_back(make_check("energy-imaginary-part", J, imag / scale, opt.tol));
    out.push_back(make_check("symmetric-functions", J, sym, opt.symmetric_tol));
  } else {
    fail("zeros", zero_detail);
  }
  out.push_back(make_check("state-residual", J, state_res, opt.tol));

  double gram = 0.0;
  for (const Sector &sec : enumerate_sectors(J)) {
    std::vector<StateVector> states;
    for (const Level *lv : spec.sector(sec))
      states.push_back(state_amplitudes(*lv));
    const auto g = overlap_matrix(states);
    gram = std::max(gram, (g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff());
  }
  out.push_back(make_check("state-orthogonality", J, gram, opt.tol));
  return out;
}

/// verify_j for every J = 1/2, 1, ..., j_max (and J = 0), in J order.
inline std::vector<CheckResult> verify_range(HalfInt j_max, const VerifyOptions &opt = {}) {
  std::vector<std::future<std::vector<CheckResult>>> jobs;
  for (HalfInt J : j_range_all(HalfInt::from_twice(0), j_max))
    jobs.push_back(std::async(std::launch::async, [J, opt] { return verify_j(J, opt); }));
  std::vector<CheckResult> out;
  for (auto &j : jobs) {
    auto r = j.get();
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

} // namespace tacs
