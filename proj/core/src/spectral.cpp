#include "groverphase/spectral.hpp"

#include <cmath>
#include <string>

namespace grover {

namespace {

constexpr double kDegeneracyGap = 1e-9;  // threshold on |lambda_1 - lambda_2|

struct HalfSeparation {
  double delta;      // in [0, pi]
  double sin_delta;  // >= 0
};

// cos(delta) = -cos(psi) sin(theta/2). sin(delta) is evaluated via
//
//   sin^2(delta) = (1 - cos(psi) s)(1 + cos(psi) s),  s = sin(theta/2),
//   1 - cos(psi) s = cos^2(theta/2) / (1 + s) + s * (2/N),
//
// using 1 - cos(psi) = 2/N exactly; this avoids the cancellation that makes
// arccos lose accuracy when N is large and theta is near pi. delta then comes
// from atan2, which is well conditioned everywhere.
HalfSeparation half_separation(std::uint64_t n, double theta) {
  const double nd = static_cast<double>(n);
  const double cos_psi = (nd - 2.0) / nd;
  const double s = std::sin(0.5 * theta);
  const double c = std::cos(0.5 * theta);
  const double one_minus = c * c / (1.0 + s) + s * (2.0 / nd);
  const double sin_delta = std::sqrt(one_minus * (1.0 + cos_psi * s));
  return {std::atan2(sin_delta, -cos_psi * s), sin_delta};
}

Complex normalize(const Complex& x, const Complex& y, Complex* out_y) {
  const double norm = std::sqrt(std::norm(x) + std::norm(y));
  *out_y = y / norm;
  return x / norm;
}

}  // namespace

Spectrum diagonalize(const IterationMatrix& m, const ProblemConfig& config) {
  const HalfSeparation hs = half_separation(config.n(), config.theta());
  const double gap = 2.0 * hs.sin_delta;
  if (gap <= kDegeneracyGap) {
    throw DegenerateSpectrumError(
        "eigenvalue separation " + std::to_string(gap) +
        " below threshold for N = " + std::to_string(config.n()));
  }

  const double mid = 0.5 * (kPi + config.theta());
  Spectrum spec;
  spec.delta = hs.delta;
  spec.gamma1 = canonicalize_angle(mid + hs.delta);
  spec.gamma2 = canonicalize_angle(mid - hs.delta);

  // Eigenvector for lambda: (m01, lambda - m00), normalized. m01 = sin(psi)
  // never vanishes, so no pivot choice is needed. The second column is
  // orthogonalized against the first: both components shrink like sin(psi)
  // near theta = pi at large N, and the plain analytic vectors lose
  // orthogonality to cancellation there.
  const Complex lambda1 = std::polar(1.0, spec.gamma1);
  const Complex lambda2 = std::polar(1.0, spec.gamma2);
  Complex u10;
  const Complex u00 = normalize(m(0, 1), lambda1 - m(0, 0), &u10);
  Complex v1;
  Complex v0 = normalize(m(0, 1), lambda2 - m(0, 0), &v1);
  const Complex overlap = std::conj(u00) * v0 + std::conj(u10) * v1;
  v0 -= overlap * u00;
  v1 -= overlap * u10;
  Complex u11;
  const Complex u01 = normalize(v0, v1, &u11);

  spec.u(0, 0) = u00;
  spec.u(1, 0) = u10;
  spec.u(0, 1) = u01;
  spec.u(1, 1) = u11;
  return spec;
}

ReducedState closed_form_state(const ProblemConfig& config,
                               const ReducedState& initial, std::size_t j) {
  const IterationMatrix m = build_iteration_matrix(config);
  const Spectrum spec = diagonalize(m, config);
  const double jd = static_cast<double>(j);
  // u^dagger v0, phase advance, back to the (B, A) basis.
  const Complex c1 = std::conj(spec.u(0, 0)) * initial.b +
                     std::conj(spec.u(1, 0)) * initial.a;
  const Complex c2 = std::conj(spec.u(0, 1)) * initial.b +
                     std::conj(spec.u(1, 1)) * initial.a;
  const Complex p1 = std::polar(1.0, jd * spec.gamma1) * c1;
  const Complex p2 = std::polar(1.0, jd * spec.gamma2) * c2;
  return {spec.u(0, 0) * p1 + spec.u(0, 1) * p2,
          spec.u(1, 0) * p1 + spec.u(1, 1) * p2};
}

double eigenphase_separation(const ProblemConfig& config) {
  return 2.0 * half_separation(config.n(), config.theta()).delta;
}

}  // namespace grover
