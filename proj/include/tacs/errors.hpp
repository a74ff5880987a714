#pragma once

#include <stdexcept>
#include <string>

namespace tacs {

/// A numerical routine failed to produce an acceptable result.
class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A computed object violates a structural property that must hold for every
/// valid solution (conjugate closure, zero location, degeneracy, ...).
class InvariantViolation : public SolverError {
public:
  InvariantViolation(std::string invariant, const std::string &detail)
      : SolverError(invariant + ": " + detail), invariant_(std::move(invariant)) {}

  const std::string &invariant() const { return invariant_; }

private:
  std::string invariant_;
};

} // namespace tacs
