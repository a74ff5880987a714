#pragma once

#include <cmath>
#include <compare>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "tacs/halfint.hpp"

namespace tacs {

/// Boson-pair count k and seniorities (nu_a, nu_b); J = k + (nu_a + nu_b)/2.
struct Sector {
  int k = 0;
  int nu_a = 0;
  int nu_b = 0;

  HalfInt J() const { return HalfInt::from_twice(2 * k + nu_a + nu_b); }
  int size() const { return k + 1; }
  std::string str() const {
    return "(" + std::to_string(k) + "," + std::to_string(nu_a) + "," + std::to_string(nu_b) + ")";
  }
  auto operator<=>(const Sector &) const = default;
};

/// The two real solutions of the c1/c2 constraint with lambda = 3/2.
enum class CouplingRoot {
  Primary,   ///< c1 = -3 + 2 sqrt 2
  Alternate, ///< c1 = -3 - 2 sqrt 2
};

constexpr double coupling_c1(CouplingRoot root) {
  return root == CouplingRoot::Primary ? -3.0 + 2.0 * std::numbers::sqrt2
                                       : -3.0 - 2.0 * std::numbers::sqrt2;
}

/// Sector label plus the boson-realization constants (c2 fixed to 1).
struct ModelConfig {
  HalfInt J;
  Sector sector;
  double c1 = coupling_c1(CouplingRoot::Primary);
  double c2 = 1.0;
  double lambda = 1.5;

  static ModelConfig make(HalfInt J, Sector s, CouplingRoot root = CouplingRoot::Primary) {
    if (s.k < 0 || s.nu_a < 0 || s.nu_a > 1 || s.nu_b < 0 || s.nu_b > 1)
      throw std::invalid_argument("invalid sector " + s.str());
    if (s.J() != J)
      throw std::invalid_argument("sector " + s.str() + " does not carry J=" + J.str());
    return ModelConfig{J, s, coupling_c1(root)};
  }

  int k() const { return sector.k; }
  int nu_a() const { return sector.nu_a; }
  int nu_b() const { return sector.nu_b; }
  double j() const { return J.value(); }
  double c1sq() const { return c1 * c1; }
  double c2sq() const { return c2 * c2; }

  /// Exponent of the pole at the origin: 1/2 + 6 c1 c2 J / (c1^2 + c2^2).
  double gamma_J() const { return 0.5 + 6.0 * c1 * c2 * j() / (c1sq() + c2sq()); }

  double alpha() const { return c1sq() * (nu_a() - j() + 1.0) + nu_b() - j() + 1.0; }

  /// 1/(c1 c2) + 12 J/(c1^2 + c2^2), the prefactor of the pair contribution
  /// to the energy.
  double energy_prefactor() const { return 1.0 / (c1 * c2) + 12.0 * j() / (c1sq() + c2sq()); }

  /// Slope of the Van Vleck polynomial V(w) = slope w + g0.
  double van_vleck_slope() const { return c1sq() * k() * (j() - k() - 0.5 - nu_a() - nu_b()); }

  /// Residuals of the two constraint equations that remove the n_a^2, n_b^2
  /// terms; both vanish for either coupling root.
  std::pair<double, double> constraint_defects() const {
    const double s = c1sq() + c2sq();
    return {c1 / c2 + 1.5 + (3.0 + 2.0 * lambda) * c1sq() / s - lambda,
            c2 / c1 + 1.5 + (3.0 + 2.0 * lambda) * c2sq() / s - lambda};
  }
};

/// Solution sectors whose sizes add up to 2J+1.
inline std::vector<Sector> enumerate_sectors(HalfInt J) {
  if (J.twice() < 0)
    throw std::invalid_argument("J must be non-negative");
  const int tj = J.twice();
  if (J.is_half_integer()) {
    const int k = (tj - 1) / 2;
    return {{k, 1, 0}, {k, 0, 1}};
  }
  std::vector<Sector> out{{tj / 2, 0, 0}};
  if (tj >= 2)
    out.push_back({tj / 2 - 1, 1, 1});
  return out;
}

} // namespace tacs
