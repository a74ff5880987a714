// Heine-Stieltjes polynomials and energies for J = 3/2 .. 9/2, next to the
// eigenvalues of the 2J+1 dimensional matrix.

#include <cstdio>
#include <iostream>

#include "tacs/tacs.hpp"

int main() {
  for (int twice = 3; twice <= 9; twice += 2) {
    const auto J = tacs::HalfInt::from_twice(twice);
    const auto s = tacs::solve_spectrum(J);
    tacs::write_table(std::cout, s);

    const auto oracle = tacs::diagonalize(tacs::build_hamiltonian(J, tacs::HamiltonianForm::Original));
    std::printf("matrix eigenvalues:");
    for (double e : tacs::to_vector(oracle.energies))
      std::printf(" %.6g", e);
    std::printf("\n\n");
  }
}
