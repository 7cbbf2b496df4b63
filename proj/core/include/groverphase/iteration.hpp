#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "groverphase/mat2.hpp"
#include "groverphase/model.hpp"

namespace grover {

using IterationMatrix = Mat2;

// One search iteration (phase oracle, then inversion about average)
// restricted to the (B, A) plane:
//
//   [ -cos(psi) e^{i theta}   sin(psi) ]
//   [  sin(psi) e^{i theta}   cos(psi) ]
//
// Unitary with determinant -e^{i theta}.
IterationMatrix build_iteration_matrix(const ProblemConfig& config);

// Variant with the A-row off-diagonal coefficient 2*sqrt(N-2)/N instead of
// sin(psi). Not unitary; kept only so verification can quantify how far that
// coefficient is from the one the full N-dimensional simulation realizes.
IterationMatrix build_iteration_matrix_nm2(const ProblemConfig& config);

ReducedState step(const ReducedState& state, const IterationMatrix& m);

struct Trajectory {
  ProblemConfig config;
  std::vector<ReducedState> states;  // states[j] = state after j applications
};

// j_max repeated applications of the iteration matrix; states[0] is the
// supplied initial state, so the result holds j_max + 1 entries.
Trajectory iterate(const ProblemConfig& config, const ReducedState& initial,
                   std::size_t j_max);

// Marked-state amplitude sin((j + 1/2) psi) of the theta = pi search after
// j iterations from the uniform start.
double grover_reference_amplitude(std::uint64_t n, std::size_t j);

}  // namespace grover
