#pragma once

#include <cstddef>

#include "groverphase/errors.hpp"
#include "groverphase/iteration.hpp"
#include "groverphase/mat2.hpp"
#include "groverphase/model.hpp"

namespace grover {

// Eigen-decomposition of the iteration matrix.
//
// The two eigenvalues are e^{i gamma_1} and e^{i gamma_2} with
//
//   gamma_{1,2} = (pi + theta)/2 +- delta,   cos(delta) = -cos(psi) sin(theta/2),
//
// which is the closed form of the characteristic quadratic
// lambda^2 - tr(T) lambda + det(T) = 0. The eigenphases therefore always
// satisfy gamma_1 + gamma_2 = pi + theta (mod 2*pi), matching
// det(T) = -e^{i theta}. Columns of u are the normalized eigenvectors;
// column k belongs to gamma_k.
struct Spectrum {
  double gamma1;  // in [0, 2*pi)
  double gamma2;  // in [0, 2*pi)
  double delta;   // half the eigenphase separation, in [0, pi]
  Mat2 u;
};

// Throws DegenerateSpectrumError when |e^{i gamma_1} - e^{i gamma_2}| <= 1e-9
// (delta within roughly 1e-9 of 0 or pi); the eigenvector basis is not
// trustworthy there. m must be the iteration matrix built from config.
Spectrum diagonalize(const IterationMatrix& m, const ProblemConfig& config);

// u . diag(e^{i j gamma_1}, e^{i j gamma_2}) . u^dagger applied to initial:
// the state after j applications without stepping. Propagates
// DegenerateSpectrumError from diagonalize.
ReducedState closed_form_state(const ProblemConfig& config,
                               const ReducedState& initial, std::size_t j);

// gamma_1 - gamma_2 = 2*delta, in [0, 2*pi]. The amplitude magnitude |B_j| is
// near-periodic in j with period p exactly when p * 2*delta is close to a
// multiple of 2*pi.
double eigenphase_separation(const ProblemConfig& config);

}  // namespace grover
