#pragma once

#include <algorithm>
#include <future>
#include <span>
#include <vector>

#include "tacs/hs_solver.hpp"
#include "tacs/roots.hpp"

namespace tacs {

struct Level {
  ModelConfig config;
  int zeta = 0;
  double energy_over_chi = 0.0;
  HSPolynomial polynomial;
  bool energy_from_zero_sum = false; ///< b0 was numerically zero
};

/// All 2J+1 levels of one J, ascending in energy.
struct Spectrum {
  HalfInt J;
  std::vector<Level> levels;

  std::vector<double> energies() const {
    std::vector<double> e;
    e.reserve(levels.size());
    for (const auto &l : levels)
      e.push_back(l.energy_over_chi);
    return e;
  }

  /// Levels of one sector, in zeta order.
  std::vector<const Level *> sector(Sector s) const {
    std::vector<const Level *> out;
    for (const auto &l : levels)
      if (l.config.sector == s)
        out.push_back(&l);
    std::sort(out.begin(), out.end(), [](auto *a, auto *b) { return a->zeta < b->zeta; });
    return out;
  }
};

/// The k+1 levels of one sector, zeta assigned by ascending energy.
inline std::vector<Level> solve_sector(const ModelConfig &cfg) {
  const auto f = build_tridiagonal(cfg);
  std::vector<Level> levels;
  for (auto &pair : solve_vanvleck(f)) {
    Level lv;
    lv.config = cfg;
    lv.polynomial = HSPolynomial{cfg, 0, std::move(pair.coeffs), pair.g0,
                                 std::move(pair.coeffs_extended)};
    try {
      lv.energy_over_chi = energy_from_coeffs(cfg, lv.polynomial.coeffs);
    } catch (const SolverError &) {
      const auto zs = polynomial_zeros(lv.polynomial);
      lv.energy_over_chi = energy_from_zeros(cfg, zs.zeros).value;
      lv.energy_from_zero_sum = true;
    }
    levels.push_back(std::move(lv));
  }
  std::stable_sort(levels.begin(), levels.end(), [](const Level &a, const Level &b) {
    return a.energy_over_chi < b.energy_over_chi;
  });
  for (std::size_t i = 0; i < levels.size(); ++i) {
    levels[i].zeta = static_cast<int>(i) + 1;
    levels[i].polynomial.zeta = levels[i].zeta;
  }
  return levels;
}

inline Spectrum solve_spectrum(HalfInt J, CouplingRoot root = CouplingRoot::Primary) {
  Spectrum s{J, {}};
  for (const Sector &sec : enumerate_sectors(J)) {
    auto lv = solve_sector(ModelConfig::make(J, sec, root));
    s.levels.insert(s.levels.end(), std::make_move_iterator(lv.begin()),
                    std::make_move_iterator(lv.end()));
  }
  std::stable_sort(s.levels.begin(), s.levels.end(), [](const Level &a, const Level &b) {
    return a.energy_over_chi < b.energy_over_chi;
  });
  if (static_cast<int>(s.levels.size()) != J.multiplicity())
    throw InvariantViolation("completeness", "J=" + J.str() + " produced " +
                                                 std::to_string(s.levels.size()) + " levels");
  return s;
}

/// Solves several J concurrently; results come back in input order.
inline std::vector<Spectrum> solve_spectra(std::span<const HalfInt> js) {
  std::vector<std::future<Spectrum>> jobs;
  jobs.reserve(js.size());
  for (HalfInt J : js)
    jobs.push_back(std::async(std::launch::async, [J] { return solve_spectrum(J); }));
  std::vector<Spectrum> out;
  out.reserve(js.size());
  for (auto &f : jobs)
    out.push_back(f.get());
  return out;
}

/// J values of one parity from the smallest up to j_max inclusive.
inline std::vector<HalfInt> j_range(HalfInt j_max, bool half_integer) {
  std::vector<HalfInt> out;
  for (int t = half_integer ? 1 : 0; t <= j_max.twice(); t += 2)
    out.push_back(HalfInt::from_twice(t));
  return out;
}

/// All J from 0 (or 1/2) to j_max in steps of 1/2.
inline std::vector<HalfInt> j_range_all(HalfInt j_min, HalfInt j_max) {
  std::vector<HalfInt> out;
  for (int t = j_min.twice(); t <= j_max.twice(); ++t)
    out.push_back(HalfInt::from_twice(t));
  return out;
}

} // namespace tacs
