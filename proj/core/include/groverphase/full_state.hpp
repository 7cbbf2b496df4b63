#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "groverphase/errors.hpp"
#include "groverphase/iteration.hpp"
#include "groverphase/model.hpp"

namespace grover {

// Brute-force N-dimensional state vector with a single marked basis state.
// Serves as the independent cross-check for the two-dimensional paths.
struct FullState {
  std::vector<Complex> amplitudes;
  std::uint64_t marked;
};

double norm_sq(const FullState& state);

// Default cap on N when materializing a full state (2^24 amplitudes,
// ~256 MiB). Overridable per call for machines that can afford more.
inline constexpr std::uint64_t kDefaultFullStateLimit = std::uint64_t{1} << 24;

// Embeds a reduced state: amplitudes[marked] = b, every other entry
// a / sqrt(N-1).
FullState lift(const ReducedState& reduced, const ProblemConfig& config);

// Multiplies the marked amplitude by e^{i theta}; everything else untouched.
FullState apply_phase_oracle(FullState state, double theta);

// Inversion about average: amp[i] -> 2*mean - amp[i]. O(N); the mean is
// accumulated with compensated summation so the cross-check against the
// reduced path stays tight at large N.
FullState apply_diffusion(FullState state);

// Inverse of lift: (amplitudes[marked], mean_unmarked * sqrt(N-1)).
// Throws SymmetryViolationError when the unmarked amplitudes differ from one
// another by more than 1e-10 relative to the largest amplitude magnitude.
ReducedState project(const FullState& state);

// j_max full iterations (phase oracle then diffusion), projecting back to a
// reduced state after each; states[0] is the supplied initial state.
// Throws SizeGuardError when N exceeds max_n.
Trajectory full_iterate(const ProblemConfig& config, const ReducedState& initial,
                        std::size_t j_max,
                        std::uint64_t max_n = kDefaultFullStateLimit);

}  // namespace grover
