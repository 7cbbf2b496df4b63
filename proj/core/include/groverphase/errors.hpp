#pragma once

#include <stdexcept>

namespace grover {

// Eigenvalues of the iteration matrix are too close to separate reliably;
// callers that can should fall back to direct iteration.
class DegenerateSpectrumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The unmarked amplitudes of a full state are not equal to each other, so the
// state has left the two-dimensional (B, A) plane. Always indicates a bug or
// a hand-corrupted state; the iteration itself preserves the plane exactly.
class SymmetryViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Refusing to materialize a full N-dimensional state vector above the cap.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace grover
