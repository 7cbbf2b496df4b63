#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "groverphase/iteration.hpp"
#include "groverphase/model.hpp"
#include "groverphase/spectral.hpp"

using namespace grover;

namespace {

// Independent oracle: eigenvalues straight from the characteristic quadratic
// lambda^2 - tr lambda + det = 0, no delta construction involved.
std::pair<Complex, Complex> quadratic_eigenvalues(const Mat2& m) {
  const Complex tr = trace(m);
  const Complex dt = det(m);
  const Complex disc = std::sqrt(tr * tr - 4.0 * dt);
  return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

double phase_gap(double a, double b) {
  double r = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(r, kTwoPi - r);
}

double state_gap(const ReducedState& x, const ReducedState& y) {
  return std::max(std::abs(x.b - y.b), std::abs(x.a - y.a));
}

const std::uint64_t kSizes[] = {2, 4, 100, 1024, 1000000};

}  // namespace

TEST_CASE("eigenphases at (100, pi/3) match the frozen oracle values") {
  const ProblemConfig config(100, kPi / 3.0);
  const Spectrum spec = diagonalize(build_iteration_matrix(config), config);
  CHECK(spec.delta == doctest::Approx(2.0828860797290445).epsilon(1e-12));
  CHECK(spec.gamma1 == doctest::Approx(4.1772811821222398).epsilon(1e-12));
  CHECK(spec.gamma2 == doctest::Approx(0.01150902266415077).epsilon(1e-12));
}

TEST_CASE("eigenphases agree with the characteristic-quadratic oracle") {
  for (std::uint64_t n : {std::uint64_t{4}, std::uint64_t{100}, std::uint64_t{1024}}) {
    for (int k = 0; k < 50; ++k) {
      const double theta = static_cast<double>(k) * (kTwoPi / 50.0);
      const ProblemConfig config(n, theta);
      const Mat2 m = build_iteration_matrix(config);
      const Spectrum spec = diagonalize(m, config);
      auto [l1, l2] = quadratic_eigenvalues(m);
      const double p1 = std::arg(l1);
      const double p2 = std::arg(l2);
      // Match the two phase sets pairwise, whichever assignment is closer.
      const double direct = std::max(phase_gap(spec.gamma1, p1), phase_gap(spec.gamma2, p2));
      const double swapped = std::max(phase_gap(spec.gamma1, p2), phase_gap(spec.gamma2, p1));
      CHECK(std::min(direct, swapped) <= 1e-10);
      CHECK(std::abs(std::abs(l1) - 1.0) <= 1e-12);
      CHECK(std::abs(std::abs(l2) - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("theta = pi eigenphases are psi and 2*pi - psi") {
  const ProblemConfig config(100, kPi);
  const Spectrum spec = diagonalize(build_iteration_matrix(config), config);
  const double psi = rotation_angle(100).psi;
  CHECK(spec.gamma1 == doctest::Approx(kTwoPi - psi).epsilon(1e-12));
  CHECK(spec.gamma2 == doctest::Approx(psi).epsilon(1e-12));
}

TEST_CASE("theta = 0 gives the reflection spectrum {1, -1}") {
  const ProblemConfig config(100, 0.0);
  const Spectrum spec = diagonalize(build_iteration_matrix(config), config);
  CHECK(spec.delta == doctest::Approx(kPi / 2.0).epsilon(1e-14));
  CHECK(spec.gamma1 == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(std::abs(spec.gamma2) <= 1e-14);
  CHECK(eigenphase_separation(config) == doctest::Approx(kPi).epsilon(1e-14));
}

TEST_CASE("sum rule and cos(delta) hold across the grid") {
  for (std::uint64_t n : kSizes) {
    const double cos_psi = rotation_angle(n).cos_psi;
    for (int k = 0; k < 100; ++k) {
      const double theta = static_cast<double>(k) * (kTwoPi / 100.0);
      const ProblemConfig config(n, theta);
      const Spectrum spec = diagonalize(build_iteration_matrix(config), config);
      CHECK(phase_gap(spec.gamma1 + spec.gamma2, kPi + theta) <= 1e-12);
      CHECK(std::abs(std::cos(spec.delta) + cos_psi * std::sin(0.5 * theta)) <= 1e-12);
      CHECK(spec.delta >= 0.0);
      CHECK(spec.delta <= kPi);
      CHECK(spec.gamma1 >= 0.0);
      CHECK(spec.gamma1 < kTwoPi);
      CHECK(spec.gamma2 >= 0.0);
      CHECK(spec.gamma2 < kTwoPi);
    }
  }
}

TEST_CASE("eigenvector residuals and basis unitarity across the grid") {
  for (std::uint64_t n : kSizes) {
    for (int k = 0; k < 100; ++k) {
      const double theta = static_cast<double>(k) * (kTwoPi / 100.0);
      const ProblemConfig config(n, theta);
      const Mat2 m = build_iteration_matrix(config);
      const Spectrum spec = diagonalize(m, config);
      CHECK(unitarity_defect(spec.u) <= 1e-12);
      const double gammas[] = {spec.gamma1, spec.gamma2};
      for (int col = 0; col < 2; ++col) {
        const Complex lambda = std::polar(1.0, gammas[col]);
        const ReducedState u{spec.u(0, col), spec.u(1, col)};
        const ReducedState mu = apply(m, u);
        const double residual = std::sqrt(std::norm(mu.b - lambda * u.b) +
                                          std::norm(mu.a - lambda * u.a));
        CHECK(residual <= 1e-12);
      }
    }
  }
}

TEST_CASE("sin(gamma) closed forms") {
  // sin(gamma_{1,2}) = -(cos psi sin theta)/2 -+ sin(theta/2) sin(delta) with
  // sin(delta) = sqrt(1 - cos^2 psi sin^2(theta/2)).
  for (std::uint64_t n : {std::uint64_t{4}, std::uint64_t{100}}) {
    const double cos_psi = rotation_angle(n).cos_psi;
    for (int k = 0; k < 100; ++k) {
      const double theta = static_cast<double>(k) * (kTwoPi / 100.0);
      const ProblemConfig config(n, theta);
      const Spectrum spec = diagonalize(build_iteration_matrix(config), config);
      const double s = std::sin(0.5 * theta);
      const double radical = std::sqrt(1.0 - cos_psi * cos_psi * s * s);
      const double base = -0.5 * cos_psi * std::sin(theta);
      CHECK(std::abs(std::sin(spec.gamma1) - (base - s * radical)) <= 1e-10);
      CHECK(std::abs(std::sin(spec.gamma2) - (base + s * radical)) <= 1e-10);
    }
  }
}

TEST_CASE("closed form at j = 0 is the identity") {
  const ProblemConfig config(100, kPi / 1.1);
  const ReducedState initial = uniform_initial_state(100);
  const ReducedState same = closed_form_state(config, initial, 0);
  CHECK(state_gap(same, initial) <= 1e-14);
}

TEST_CASE("closed form tracks direct iteration out to j = 10^4") {
  const double thetas[] = {0.1, kPi / 4.0, kPi / 3.0, kPi / 1.1, kPi};
  const std::size_t js[] = {1, 2, 3, 10, 100, 1000, 10000};
  for (std::uint64_t n : {std::uint64_t{4}, std::uint64_t{100}, std::uint64_t{1024}}) {
    for (double theta : thetas) {
      const ProblemConfig config(n, theta);
      const ReducedState initial = uniform_initial_state(n);
      const Trajectory traj = iterate(config, initial, 10000);
      for (std::size_t j : js) {
        CHECK(state_gap(closed_form_state(config, initial, j), traj.states[j]) <=
              1e-10);
      }
    }
  }
}

TEST_CASE("closed form reproduces the frozen theta = pi amplitude") {
  const ProblemConfig config(100, kPi);
  const ReducedState after7 =
      closed_form_state(config, uniform_initial_state(100), 7);
  CHECK(std::abs(after7.b) ==
        doctest::Approx(0.99766948452761606).epsilon(1e-12));
}

TEST_CASE("eigenphase separation and the near-period at pi/3") {
  const ProblemConfig config(100, kPi / 3.0);
  const double sep = eigenphase_separation(config);
  CHECK(sep == doctest::Approx(4.165772159458089).epsilon(1e-12));
  // Three periods of the phase difference nearly close the circle twice:
  // 3 * sep = 4*pi - 0.069, hence the near-period-3 beat of |B_j|.
  CHECK(std::abs(4.0 * kPi - 3.0 * sep) ==
        doctest::Approx(0.069054135984906395).epsilon(1e-9));
  CHECK(std::abs(4.0 * kPi - 3.0 * sep) < 0.07);

  const ProblemConfig at_pi(100, kPi);
  CHECK(eigenphase_separation(at_pi) ==
        doctest::Approx(kTwoPi - 2.0 * rotation_angle(100).psi).epsilon(1e-12));
}

TEST_CASE("a degenerate spectrum is reported, not silently used") {
  // At N = 2^64 - 1, cos(psi) rounds to 1 and the eigenvalue gap at theta = pi
  // collapses below the threshold.
  const std::uint64_t huge = ~std::uint64_t{0};
  const ProblemConfig config(huge, kPi);
  CHECK_THROWS_AS(diagonalize(build_iteration_matrix(config), config),
                  DegenerateSpectrumError);
  CHECK_THROWS_AS(closed_form_state(config, uniform_initial_state(huge), 3),
                  DegenerateSpectrumError);
  // Sane sizes stay comfortably clear of the threshold even at theta = pi.
  const ProblemConfig sane(1000000, kPi);
  CHECK_NOTHROW(diagonalize(build_iteration_matrix(sane), sane));
}
