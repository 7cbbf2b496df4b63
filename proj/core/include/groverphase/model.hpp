#pragma once

#include <complex>
#include <cstdint>
#include <numbers>

namespace grover {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Wraps a finite angle into [0, 2*pi). Throws std::domain_error on NaN/inf.
double canonicalize_angle(double radians);

// Search-space size N, the phase theta applied to the marked state, and the
// marked basis index. theta is stored canonicalized to [0, 2*pi).
class ProblemConfig {
 public:
  ProblemConfig(std::uint64_t n, double theta, std::uint64_t marked = 0);

  std::uint64_t n() const { return n_; }
  double theta() const { return theta_; }
  std::uint64_t marked() const { return marked_; }

 private:
  std::uint64_t n_;
  double theta_;
  std::uint64_t marked_;
};

// Per-iteration rotation angle psi = 2*asin(1/sqrt(N)), together with
// cos(psi) = (N-2)/N and sin(psi) = 2*sqrt(N-1)/N evaluated directly from N.
struct RotationAngle {
  double psi;
  double cos_psi;
  double sin_psi;
};

// Amplitude pair: b is the marked-state amplitude, a the common amplitude
// factor of the uniform superposition over the N-1 unmarked states.
struct ReducedState {
  Complex b;
  Complex a;
};

double norm_sq(const ReducedState& state);

// | |b|^2 + |a|^2 - 1 |
double norm_defect(const ReducedState& state);

RotationAngle rotation_angle(std::uint64_t n);

// (1/sqrt(N), sqrt((N-1)/N)): the uniform superposition.
ReducedState uniform_initial_state(std::uint64_t n);

// Validates |b|^2 + |a|^2 = 1 within 1e-9 and returns the pair unchanged.
// Throws std::invalid_argument reporting the norm otherwise.
ReducedState custom_initial_state(Complex b, Complex a);

}  // namespace grover
