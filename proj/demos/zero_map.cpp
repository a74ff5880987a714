// Zeros of every polynomial at one J, with the count of zeros whose real part
// lies inside or outside |Re w| = 1. Usage: zero_map [J], default 21/2.

#include <cstdio>
#include <exception>

#include "tacs/tacs.hpp"

int main(int argc, char **argv) {
  try {
    const auto J = tacs::HalfInt::parse(argc > 1 ? argv[1] : "21/2");
    const auto s = tacs::solve_spectrum(J);
    for (const auto &level : s.levels) {
      if (level.config.k() == 0)
        continue;
      const auto z = tacs::polynomial_zeros(level.polynomial);
      const auto split = tacs::classify_zeros(z);
      std::printf("%s zeta=%d E/chi=% .6f inner=%d outer=%d bethe=%.2e\n",
                  level.config.sector.str().c_str(), level.zeta, level.energy_over_chi, split.inner,
                  split.outer, z.bethe_residual);
      for (const auto &w : z.zeros)
        std::printf("    % .10f %+.10fi\n", w.real(), w.imag());
    }
  } catch (const std::exception &e) {
    std::fprintf(stderr, "zero_map: %s\n", e.what());
    return 1;
  }
}
