#include "groverphase/full_state.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

namespace grover {

namespace {

// Neumaier compensated accumulator: keeps sums of N near-equal terms accurate
// to O(eps) instead of O(N eps), which is what lets the full path track the
// reduced one to ~1e-14 at N in the thousands.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

Complex compensated_mean(const std::vector<Complex>& amplitudes) {
  CompensatedSum re;
  CompensatedSum im;
  for (const Complex& amp : amplitudes) {
    re.add(amp.real());
    im.add(amp.imag());
  }
  const double count = static_cast<double>(amplitudes.size());
  return {re.value() / count, im.value() / count};
}

}  // namespace

double norm_sq(const FullState& state) {
  CompensatedSum acc;
  for (const Complex& amp : state.amplitudes) {
    acc.add(std::norm(amp));
  }
  return acc.value();
}

FullState lift(const ReducedState& reduced, const ProblemConfig& config) {
  const double nd = static_cast<double>(config.n());
  const Complex unmarked = reduced.a / std::sqrt(nd - 1.0);
  FullState state{std::vector<Complex>(config.n(), unmarked), config.marked()};
  state.amplitudes[config.marked()] = reduced.b;
  return state;
}

FullState apply_phase_oracle(FullState state, double theta) {
  state.amplitudes[state.marked] *= std::polar(1.0, theta);
  return state;
}

FullState apply_diffusion(FullState state) {
  const Complex twice_mean = 2.0 * compensated_mean(state.amplitudes);
  for (Complex& amp : state.amplitudes) {
    amp = twice_mean - amp;
  }
  return state;
}

ReducedState project(const FullState& state) {
  const std::size_t n = state.amplitudes.size();
  CompensatedSum re;
  CompensatedSum im;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    scale = std::max(scale, std::abs(state.amplitudes[i]));
    if (i == state.marked) {
      continue;
    }
    re.add(state.amplitudes[i].real());
    im.add(state.amplitudes[i].imag());
  }
  const double count = static_cast<double>(n - 1);
  const Complex mean{re.value() / count, im.value() / count};

  double spread = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != state.marked) {
      spread = std::max(spread, std::abs(state.amplitudes[i] - mean));
    }
  }
  if (scale > 0.0 && spread > 1e-10 * scale) {
    throw SymmetryViolationError(
        "unmarked amplitudes are not uniform: relative spread " +
        std::to_string(spread / scale));
  }
  return {state.amplitudes[state.marked], mean * std::sqrt(count)};
}

Trajectory full_iterate(const ProblemConfig& config, const ReducedState& initial,
                        std::size_t j_max, std::uint64_t max_n) {
  if (config.n() > max_n) {
    throw SizeGuardError("N = " + std::to_string(config.n()) +
                         " exceeds the full-state limit " + std::to_string(max_n));
  }
  Trajectory traj{config, {}};
  traj.states.reserve(j_max + 1);
  traj.states.push_back(initial);
  FullState state = lift(initial, config);
  for (std::size_t j = 0; j < j_max; ++j) {
    state = apply_diffusion(apply_phase_oracle(std::move(state), config.theta()));
    traj.states.push_back(project(state));
  }
  return traj;
}

}  // namespace grover
