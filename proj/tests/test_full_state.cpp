#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "groverphase/full_state.hpp"
#include "groverphase/iteration.hpp"
#include "groverphase/model.hpp"

using namespace grover;

namespace {

double state_gap(const ReducedState& x, const ReducedState& y) {
  return std::max(std::abs(x.b - y.b), std::abs(x.a - y.a));
}

double rng_pm1(std::mt19937_64& rng) {
  return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
}

FullState random_full_state(std::mt19937_64& rng, std::size_t n) {
  FullState state{std::vector<Complex>(n), 0};
  double sum = 0.0;
  for (Complex& amp : state.amplitudes) {
    amp = Complex(rng_pm1(rng), rng_pm1(rng));
    sum += std::norm(amp);
  }
  for (Complex& amp : state.amplitudes) {
    amp /= std::sqrt(sum);
  }
  return state;
}

}  // namespace

TEST_CASE("lift spreads the unmarked amplitude uniformly") {
  const FullState u4 = lift(uniform_initial_state(4), ProblemConfig(4, kPi));
  REQUIRE(u4.amplitudes.size() == 4);
  for (const Complex& amp : u4.amplitudes) {
    CHECK(std::abs(amp - Complex(0.5, 0.0)) <= 1e-15);
  }

  const FullState basis = lift({{1.0, 0.0}, {0.0, 0.0}}, ProblemConfig(16, kPi, 5));
  CHECK(basis.marked == 5);
  CHECK(std::abs(basis.amplitudes[5] - Complex(1.0, 0.0)) <= 1e-15);
  for (std::size_t i = 0; i < 16; ++i) {
    if (i != 5) {
      CHECK(std::abs(basis.amplitudes[i]) <= 1e-15);
    }
  }

  const FullState mixed = lift({{0.6, 0.0}, {0.0, 0.8}}, ProblemConfig(100, kPi));
  CHECK(std::abs(mixed.amplitudes[0] - Complex(0.6, 0.0)) <= 1e-15);
  CHECK(std::abs(mixed.amplitudes[17] - Complex(0.0, 0.8 / std::sqrt(99.0))) <= 1e-15);
  CHECK(std::abs(norm_sq(mixed) - 1.0) <= 1e-14);
}

TEST_CASE("phase oracle touches only the marked amplitude") {
  FullState state = lift(uniform_initial_state(4), ProblemConfig(4, kPi, 2));
  const double before = norm_sq(state);
  state = apply_phase_oracle(std::move(state), kPi);
  CHECK(std::abs(state.amplitudes[2] - Complex(-0.5, 0.0)) <= 1e-15);
  CHECK(std::abs(state.amplitudes[0] - Complex(0.5, 0.0)) <= 1e-15);
  CHECK(std::abs(norm_sq(state) - before) <= 1e-15);

  state = apply_phase_oracle(std::move(state), kPi / 2.0);
  CHECK(std::abs(state.amplitudes[2] - Complex(0.0, -0.5)) <= 1e-15);

  // theta = 0 is the identity.
  FullState same = lift(uniform_initial_state(8), ProblemConfig(8, 0.0));
  same = apply_phase_oracle(std::move(same), 0.0);
  CHECK(std::abs(same.amplitudes[0] - uniform_initial_state(8).b) <= 1e-15);
}

TEST_CASE("diffusion inverts about the average") {
  // Classic hand example: (-1/2, 1/2, 1/2, 1/2) -> (1, 0, 0, 0).
  FullState state{{{-0.5, 0.0}, {0.5, 0.0}, {0.5, 0.0}, {0.5, 0.0}}, 0};
  state = apply_diffusion(std::move(state));
  CHECK(std::abs(state.amplitudes[0] - Complex(1.0, 0.0)) <= 1e-15);
  for (int i = 1; i < 4; ++i) {
    CHECK(std::abs(state.amplitudes[i]) <= 1e-15);
  }

  // The uniform state is a fixed point.
  FullState uniform = lift(uniform_initial_state(64), ProblemConfig(64, kPi));
  const Complex expected = uniform.amplitudes[0];
  uniform = apply_diffusion(std::move(uniform));
  CHECK(std::abs(uniform.amplitudes[0] - expected) <= 1e-15);

  // Involution and norm preservation on random states.
  std::mt19937_64 rng(99);
  for (std::size_t n : {std::size_t{16}, std::size_t{256}}) {
    const FullState original = random_full_state(rng, n);
    const double before = norm_sq(original);
    const FullState once = apply_diffusion(original);
    CHECK(std::abs(norm_sq(once) - before) <= 1e-13);
    const FullState twice = apply_diffusion(once);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(twice.amplitudes[i] - original.amplitudes[i]) <= 1e-13);
    }
  }
}

TEST_CASE("diffusion agrees with the literal dense matrix") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {std::size_t{2}, std::size_t{3}, std::size_t{4},
                        std::size_t{5}, std::size_t{8}, std::size_t{16},
                        std::size_t{33}, std::size_t{64}}) {
    const FullState state = random_full_state(rng, n);
    const FullState fast = apply_diffusion(state);
    const double off = 2.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      Complex want(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        want += (i == k ? off - 1.0 : off) * state.amplitudes[k];
      }
      CHECK(std::abs(fast.amplitudes[i] - want) <= 1e-13);
    }
  }
}

TEST_CASE("project inverts lift and rejects asymmetric states") {
  const ProblemConfig config(100, kPi, 13);
  const ReducedState reduced{{0.36, 0.48}, {0.48, -0.64}};  // |b|^2 + |a|^2 = 1
  REQUIRE(norm_defect(reduced) <= 1e-12);
  const ReducedState roundtrip = project(lift(reduced, config));
  CHECK(state_gap(roundtrip, reduced) <= 1e-14);

  FullState corrupted = lift(reduced, config);
  corrupted.amplitudes[40] += Complex(0.01, 0.0);
  CHECK_THROWS_AS(project(corrupted), SymmetryViolationError);
}

TEST_CASE("one full iteration equals one reduced step") {
  for (std::uint64_t n : {std::uint64_t{4}, std::uint64_t{100}, std::uint64_t{1024}}) {
    for (double theta : {0.0, kPi / 4.0, kPi / 1.1, kPi}) {
      const ProblemConfig config(n, theta);
      const ReducedState initial = uniform_initial_state(n);
      const ReducedState via_full = full_iterate(config, initial, 1).states[1];
      const ReducedState via_step = step(initial, build_iteration_matrix(config));
      CHECK(state_gap(via_full, via_step) <= 1e-12);
    }
  }
}

TEST_CASE("full trajectories track the reduced ones") {
  const ProblemConfig config(100, kPi / 3.0);
  const ReducedState initial = uniform_initial_state(100);
  const Trajectory full = full_iterate(config, initial, 100);
  const Trajectory reduced = iterate(config, initial, 100);
  REQUIRE(full.states.size() == 101);
  CHECK(full.states[0].b == initial.b);  // states[0] is the supplied state
  for (std::size_t j = 0; j <= 100; ++j) {
    CHECK(state_gap(full.states[j], reduced.states[j]) <= 1e-11);
    CHECK(norm_defect(full.states[j]) <= 1e-12);
  }
}

TEST_CASE("N = 1024 at theta = pi lands on the reference amplitude") {
  const ProblemConfig config(1024, kPi);
  const Trajectory traj = full_iterate(config, uniform_initial_state(1024), 25);
  const double b25 = std::abs(traj.states[25].b);
  CHECK(b25 == doctest::Approx(0.99973058608027354).epsilon(1e-12));
  CHECK(std::abs(b25 - std::abs(grover_reference_amplitude(1024, 25))) <= 1e-10);
}

TEST_CASE("the marked index is a relabeling, nothing more") {
  const ReducedState initial = uniform_initial_state(100);
  const Trajectory at0 = full_iterate(ProblemConfig(100, kPi / 1.1, 0), initial, 40);
  const Trajectory at57 = full_iterate(ProblemConfig(100, kPi / 1.1, 57), initial, 40);
  for (std::size_t j = 0; j <= 40; ++j) {
    CHECK(state_gap(at0.states[j], at57.states[j]) <= 1e-14);
  }
}

TEST_CASE("the size guard refuses oversized states") {
  CHECK_THROWS_AS(
      full_iterate(ProblemConfig(2048, kPi), uniform_initial_state(2048), 1, 1024),
      SizeGuardError);
  // Default limit: 2^24 passes the gate, one more does not.
  const std::uint64_t just_over = (std::uint64_t{1} << 24) + 1;
  CHECK_THROWS_AS(
      full_iterate(ProblemConfig(just_over, kPi), uniform_initial_state(just_over), 1),
      SizeGuardError);
}

TEST_CASE("long runs keep the unmarked amplitudes identical") {
  const ProblemConfig config(100, kPi / 1.1);
  FullState state = lift(uniform_initial_state(100), config);
  double worst = 0.0;
  for (int j = 0; j < 1000; ++j) {
    state = apply_diffusion(apply_phase_oracle(std::move(state), config.theta()));
    double scale = 0.0;
    for (const Complex& amp : state.amplitudes) {
      scale = std::max(scale, std::abs(amp));
    }
    for (std::size_t i = 2; i < state.amplitudes.size(); ++i) {
      worst = std::max(worst,
                       std::abs(state.amplitudes[i] - state.amplitudes[1]) / scale);
    }
  }
  CHECK(worst <= 1e-11);
}
