#pragma once

#include "tacs/bands.hpp"
#include "tacs/eigenstates.hpp"
#include "tacs/errors.hpp"
#include "tacs/halfint.hpp"
#include "tacs/hamiltonian.hpp"
#include "tacs/hs_solver.hpp"
#include "tacs/io.hpp"
#include "tacs/model.hpp"
#include "tacs/roots.hpp"
#include "tacs/spectrum.hpp"
#include "tacs/tridiagonal.hpp"
#include "tacs/verify.hpp"
