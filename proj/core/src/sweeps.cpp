#include "groverphase/sweeps.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace grover {

ReducedState state_after(const ProblemConfig& config, const ReducedState& initial,
                         std::size_t j, Engine engine, std::uint64_t max_n) {
  switch (engine) {
    case Engine::kReduced: {
      const IterationMatrix m = build_iteration_matrix(config);
      ReducedState state = initial;
      for (std::size_t k = 0; k < j; ++k) {
        state = step(state, m);
      }
      return state;
    }
    case Engine::kSpectral:
      return closed_form_state(config, initial, j);
    case Engine::kFull:
      return full_iterate(config, initial, j, max_n).states.back();
    case Engine::kAuto:
      try {
        return closed_form_state(config, initial, j);
      } catch (const DegenerateSpectrumError&) {
        return state_after(config, initial, j, Engine::kReduced, max_n);
      }
  }
  throw std::logic_error("unreachable engine");
}

Trajectory trajectory_by_engine(const ProblemConfig& config,
                                const ReducedState& initial, std::size_t j_max,
                                Engine engine, std::uint64_t max_n) {
  switch (engine) {
    case Engine::kReduced:
      return iterate(config, initial, j_max);
    case Engine::kFull:
      return full_iterate(config, initial, j_max, max_n);
    case Engine::kSpectral:
    case Engine::kAuto: {
      Trajectory traj{config, {}};
      traj.states.reserve(j_max + 1);
      traj.states.push_back(initial);
      try {
        for (std::size_t j = 1; j <= j_max; ++j) {
          traj.states.push_back(closed_form_state(config, initial, j));
        }
      } catch (const DegenerateSpectrumError&) {
        if (engine == Engine::kSpectral) {
          throw;
        }
        return iterate(config, initial, j_max);
      }
      return traj;
    }
  }
  throw std::logic_error("unreachable engine");
}

ThetaSweep theta_sweep(std::uint64_t n, std::size_t applications,
                       std::size_t grid_points, ThetaWindow window, Engine engine) {
  if (grid_points < 3) {
    throw std::invalid_argument("sweep needs at least 3 grid points, got " +
                                std::to_string(grid_points));
  }
  if (!(window.lo >= 0.0 && window.lo < window.hi && window.hi <= kTwoPi)) {
    throw std::invalid_argument("sweep window must satisfy 0 <= lo < hi <= 2*pi");
  }
  ThetaSweep sweep{n, applications, {}, {}};
  sweep.grid.reserve(grid_points);
  sweep.values.reserve(grid_points);
  const ReducedState initial = uniform_initial_state(n);
  const double span = window.hi - window.lo;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double theta =
        window.lo + (static_cast<double>(i) / static_cast<double>(grid_points)) * span;
    const ProblemConfig config(n, theta);
    const ReducedState state = state_after(config, initial, applications, engine);
    sweep.grid.push_back(theta);
    sweep.values.push_back(std::abs(state.b));
  }
  return sweep;
}

PeakReport count_peaks(const ThetaSweep& sweep, ThetaWindow window) {
  if (sweep.grid.size() < 3) {
    throw std::invalid_argument("peak counting needs at least 3 grid points");
  }
  if (!(window.lo < window.hi) || window.hi <= sweep.grid.front() ||
      window.lo >= sweep.grid.back()) {
    throw std::invalid_argument("peak window does not overlap the sweep grid");
  }
  PeakReport report{0, {}, window};
  const std::vector<double>& v = sweep.values;
  const std::size_t last = v.size() - 1;
  std::size_t i = 1;
  while (i < last) {
    if (v[i] > v[i - 1]) {
      // Candidate peak; let exact ties extend a plateau to the right.
      std::size_t k = i;
      while (k + 1 <= last && v[k + 1] == v[k]) {
        ++k;
      }
      if (k < last && v[k + 1] < v[k]) {
        const double theta = sweep.grid[i];  // leftmost index of the plateau
        if (theta > window.lo && theta < window.hi) {
          ++report.count;
          report.locations.push_back(theta);
        }
      }
      i = k + 1;
    } else {
      ++i;
    }
  }
  return report;
}

TrajectoryStats trajectory_stats(const ProblemConfig& config, std::size_t j_max) {
  if (j_max < 1) {
    throw std::invalid_argument("trajectory statistics need j_max >= 1");
  }
  const Trajectory traj = iterate(config, uniform_initial_state(config.n()), j_max);
  TrajectoryStats stats{0.0, 0, 0.0, 0, {}};
  stats.values.reserve(j_max + 1);
  for (const ReducedState& state : traj.states) {
    stats.values.push_back(std::abs(state.b));
  }
  stats.max_norm = stats.values[0];
  stats.argmax_j = 0;
  stats.min_norm_excluding_start = stats.values[1];
  stats.argmin_j = 1;
  for (std::size_t j = 1; j <= j_max; ++j) {
    if (stats.values[j] > stats.max_norm) {
      stats.max_norm = stats.values[j];
      stats.argmax_j = j;
    }
    if (stats.values[j] < stats.min_norm_excluding_start) {
      stats.min_norm_excluding_start = stats.values[j];
      stats.argmin_j = j;
    }
  }
  return stats;
}

Table figure_dataset(int figure_id, Engine engine) {
  const std::uint64_t n = 100;
  switch (figure_id) {
    case 1:
    case 2: {
      const std::size_t applications = figure_id == 1 ? 4 : 7;
      const ThetaSweep sweep = theta_sweep(n, applications, 2000, {0.0, kTwoPi}, engine);
      Table table{{"theta", "abs_B"}, {}};
      table.rows.reserve(sweep.grid.size());
      for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
        table.rows.push_back({sweep.grid[i], sweep.values[i]});
      }
      return table;
    }
    case 3:
    case 4:
    case 5: {
      const double theta = figure_id == 3   ? kPi / 4.0
                           : figure_id == 4 ? kPi / 3.0
                                            : kPi / 1.1;
      const ProblemConfig config(n, theta);
      const Trajectory traj =
          trajectory_by_engine(config, uniform_initial_state(n), 101, engine);
      Table table{{"applications", "abs_B"}, {}};
      table.rows.reserve(101);
      for (std::size_t j = 1; j <= 101; ++j) {
        table.rows.push_back({static_cast<double>(j), std::abs(traj.states[j].b)});
      }
      return table;
    }
    default:
      throw std::invalid_argument("unknown figure id " + std::to_string(figure_id) +
                                  " (valid: 1..5)");
  }
}

}  // namespace grover
