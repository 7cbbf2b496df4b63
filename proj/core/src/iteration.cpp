#include "groverphase/iteration.hpp"

#include <cmath>

namespace grover {

IterationMatrix build_iteration_matrix(const ProblemConfig& config) {
  const RotationAngle rot = rotation_angle(config.n());
  const Complex phase = std::polar(1.0, config.theta());
  IterationMatrix m;
  m(0, 0) = -rot.cos_psi * phase;
  m(0, 1) = Complex(rot.sin_psi, 0.0);
  m(1, 0) = rot.sin_psi * phase;
  m(1, 1) = Complex(rot.cos_psi, 0.0);
  return m;
}

IterationMatrix build_iteration_matrix_nm2(const ProblemConfig& config) {
  const double nd = static_cast<double>(config.n());
  const double coeff = 2.0 * std::sqrt(nd - 2.0) / nd;
  IterationMatrix m = build_iteration_matrix(config);
  m(1, 0) = coeff * std::polar(1.0, config.theta());
  return m;
}

ReducedState step(const ReducedState& state, const IterationMatrix& m) {
  return apply(m, state);
}

Trajectory iterate(const ProblemConfig& config, const ReducedState& initial,
                   std::size_t j_max) {
  const IterationMatrix m = build_iteration_matrix(config);
  Trajectory traj{config, {}};
  traj.states.reserve(j_max + 1);
  traj.states.push_back(initial);
  ReducedState state = initial;
  for (std::size_t j = 0; j < j_max; ++j) {
    state = step(state, m);
    traj.states.push_back(state);
  }
  return traj;
}

double grover_reference_amplitude(std::uint64_t n, std::size_t j) {
  const RotationAngle rot = rotation_angle(n);
  return std::sin((static_cast<double>(j) + 0.5) * rot.psi);
}

}  // namespace grover
