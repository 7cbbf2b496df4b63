#include "groverphase/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace grover {

double canonicalize_angle(double radians) {
  if (!std::isfinite(radians)) {
    throw std::domain_error("angle must be finite");
  }
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  if (r >= kTwoPi) {  // r + kTwoPi can round back up to kTwoPi
    r = 0.0;
  }
  return r;
}

ProblemConfig::ProblemConfig(std::uint64_t n, double theta, std::uint64_t marked)
    : n_(n), theta_(canonicalize_angle(theta)), marked_(marked) {
  if (n < 2) {
    throw std::domain_error("search-space size must be at least 2, got " +
                            std::to_string(n));
  }
  if (marked >= n) {
    throw std::domain_error("marked index " + std::to_string(marked) +
                            " out of range for N = " + std::to_string(n));
  }
}

double norm_sq(const ReducedState& state) {
  return std::norm(state.b) + std::norm(state.a);
}

double norm_defect(const ReducedState& state) {
  return std::abs(norm_sq(state) - 1.0);
}

RotationAngle rotation_angle(std::uint64_t n) {
  if (n < 2) {
    throw std::domain_error("rotation angle undefined for N < 2");
  }
  const double nd = static_cast<double>(n);
  RotationAngle rot;
  rot.cos_psi = (nd - 2.0) / nd;
  rot.sin_psi = 2.0 * std::sqrt(nd - 1.0) / nd;
  rot.psi = 2.0 * std::asin(1.0 / std::sqrt(nd));
  return rot;
}

ReducedState uniform_initial_state(std::uint64_t n) {
  if (n < 2) {
    throw std::domain_error("uniform state undefined for N < 2");
  }
  const double nd = static_cast<double>(n);
  return {Complex(1.0 / std::sqrt(nd), 0.0),
          Complex(std::sqrt((nd - 1.0) / nd), 0.0)};
}

ReducedState custom_initial_state(Complex b, Complex a) {
  const ReducedState state{b, a};
  if (norm_defect(state) > 1e-9) {
    throw std::invalid_argument("initial state not normalized: |b|^2 + |a|^2 = " +
                                std::to_string(norm_sq(state)));
  }
  return state;
}

}  // namespace grover
