#pragma once

// Doublet pairing, E -> -E symmetry, and the yrast / yrare bands across J.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tacs/hamiltonian.hpp"
#include "tacs/spectrum.hpp"

namespace tacs {

/// Pairs sorted levels (0,1), (2,3), ... for half-integer J.
/// Throws InvariantViolation if some pair is split by more than tol * scale.
inline std::vector<std::pair<std::size_t, std::size_t>> pair_degeneracies(const Spectrum &s,
                                                                          double tol = 1e-8) {
  if (!s.J.is_half_integer())
    throw std::invalid_argument("pair_degeneracies: J=" + s.J.str() + " is not a half-integer");
  const auto e = s.energies();
  const double scale = energy_scale(e);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < e.size(); i += 2) {
    if (!(std::abs(e[i + 1] - e[i]) < tol * scale))
      throw InvariantViolation("degeneracy", "J=" + s.J.str() + " level " + std::to_string(i) +
                                                 " is unpaired (gap " +
                                                 std::to_string(e[i + 1] - e[i]) + ")");
    pairs.emplace_back(i, i + 1);
  }
  return pairs;
}

struct MirrorCheck {
  double defect = 0.0; ///< max_i |E_i + E_{n-1-i}|
  double scale = 1.0;  ///< max(1, max|E|)
  bool ok = true;
};

inline MirrorCheck check_mirror_symmetry(const Spectrum &s, double tol = 1e-8) {
  const auto e = s.energies();
  MirrorCheck m;
  m.scale = energy_scale(e);
  for (std::size_t i = 0; i < e.size(); ++i)
    m.defect = std::max(m.defect, std::abs(e[i] + e[e.size() - 1 - i]));
  m.ok = m.defect < tol * m.scale;
  return m;
}

/// Distinct energies in ascending order, merging values within tol * scale.
/// Each entry keeps the first level of its cluster.
inline std::vector<const Level *> distinct_levels(const Spectrum &s, double tol = 1e-8) {
  const double scale = energy_scale(s.energies());
  std::vector<const Level *> out;
  for (const auto &l : s.levels)
    if (out.empty() || std::abs(l.energy_over_chi - out.back()->energy_over_chi) > tol * scale)
      out.push_back(&l);
  return out;
}

/// Number of distinct energies strictly below -tol * scale.
inline int count_negative_distinct(const Spectrum &s, double tol = 1e-8) {
  const double scale = energy_scale(s.energies());
  int n = 0;
  for (const Level *l : distinct_levels(s, tol))
    n += l->energy_over_chi < -tol * scale;
  return n;
}

/// Number of distinct negative levels expected for J = k + 1/2:
/// Int[k/2] + 1 for odd k, k/2 for even k.
constexpr int expected_negative_doublets(int k) { return k % 2 ? k / 2 + 1 : k / 2; }

/// Omega = b1 / (b0 c1); zero for k = 0 where b1 vanishes.
inline double omega(const Level &l) {
  const auto &b = l.polynomial.coeffs;
  if (b.size() < 2)
    return 0.0;
  return b[1] / (b[0] * l.config.c1);
}

/// Energy from Omega in closed form,
///   -(J^2 - (Omega + 1/2 - kappa) J + (Omega - kappa)/2),
/// with kappa = (c1^2 nu_a + c2^2 nu_b) / (2 c1 c2). For the (0,1) sector
/// kappa = 1/(2 c1).
inline double band_energy_from_omega(const ModelConfig &cfg, double om) {
  const double J = cfg.j();
  const double kappa = (cfg.c1sq() * cfg.nu_a() + cfg.c2sq() * cfg.nu_b()) / (2.0 * cfg.c1 * cfg.c2);
  return -(J * J - (om + 0.5 - kappa) * J + 0.5 * (om - kappa));
}

struct BandPoint {
  HalfInt J;
  double energy_over_chi = 0.0;
  double omega = 0.0;
  Sector sector; ///< sector whose polynomial supplied omega
  double omega_energy = 0.0; ///< band_energy_from_omega for that level
};

struct Band {
  int zeta = 0;
  std::vector<BandPoint> points; ///< ascending J
};

enum class JParity { Half, Integer };

/// The level of a spectrum that supplies Omega for band member `rank`
/// (0-based among distinct non-positive energies). Half-integer J uses the
/// (0,1) sector; integer J uses the (0,0) sector.
inline const Level *band_level(const Spectrum &s, int rank) {
  const auto sectors = enumerate_sectors(s.J);
  const Sector sec = s.J.is_half_integer() ? sectors[1] : sectors[0];
  auto lv = s.sector(sec);
  if (rank < static_cast<int>(lv.size()))
    return lv[rank];
  return nullptr;
}

/// Bands of the non-positive branch built from pre-solved spectra.
inline std::vector<Band> extract_bands(const std::vector<Spectrum> &spectra, double tol = 1e-8) {
  std::vector<Band> bands;
  for (const auto &s : spectra) {
    const double scale = energy_scale(s.energies());
    std::vector<const Level *> branch;
    for (const Level *l : distinct_levels(s, tol))
      if (l->energy_over_chi <= tol * scale)
        branch.push_back(l);
    for (std::size_t z = 0; z < branch.size(); ++z) {
      if (bands.size() <= z)
        bands.push_back(Band{static_cast<int>(z) + 1, {}});
      BandPoint p{s.J, branch[z]->energy_over_chi};
      const Level *src = band_level(s, static_cast<int>(z));
      // Integer J: the (0,0) sector need not hold the z-th distinct level.
      if (src && std::abs(src->energy_over_chi - p.energy_over_chi) > 1e-6 * scale)
        src = branch[z];
      if (!src)
        src = branch[z];
      p.sector = src->config.sector;
      p.omega = omega(*src);
      p.omega_energy = band_energy_from_omega(src->config, p.omega);
      bands[z].points.push_back(p);
    }
  }
  return bands;
}

inline std::vector<Band> extract_bands(HalfInt j_max, JParity parity, double tol = 1e-8) {
  if (j_max.twice() < 1)
    throw std::invalid_argument("extract_bands: J_max must be at least 1/2");
  const auto js = j_range(j_max, parity == JParity::Half);
  return extract_bands(solve_spectra(js), tol);
}

struct QuadraticFit {
  double a = 0.0, b = 0.0, c = 0.0; ///< E/chi ~ a J^2 + b J + c
  double rms_residual = 0.0;
  double omega_identity_defect = 0.0; ///< max |omega_energy - E| / scale over the band
  std::size_t points = 0;
};

/// Unweighted least-squares quadratic in J.
inline QuadraticFit quadratic_fit(const Band &band) {
  const auto n = static_cast<Eigen::Index>(band.points.size());
  if (n < 3)
    throw std::invalid_argument("quadratic_fit: band zeta=" + std::to_string(band.zeta) +
                                " has " + std::to_string(n) + " points, need at least 3");
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd y(n);
  double scale = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double J = band.points[i].J.value();
    a.row(i) << J * J, J, 1.0;
    y[i] = band.points[i].energy_over_chi;
    scale = std::max(scale, std::abs(y[i]));
  }
  const Eigen::Vector3d coef = a.colPivHouseholderQr().solve(y);
  QuadraticFit fit;
  fit.a = coef[0];
  fit.b = coef[1];
  fit.c = coef[2];
  fit.rms_residual = std::sqrt((a * coef - y).squaredNorm() / static_cast<double>(n));
  fit.points = static_cast<std::size_t>(n);
  for (const auto &p : band.points)
    fit.omega_identity_defect =
        std::max(fit.omega_identity_defect, std::abs(p.omega_energy - p.energy_over_chi) / scale);
  return fit;
}

} // namespace tacs
