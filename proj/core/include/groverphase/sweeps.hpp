#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "groverphase/csv.hpp"
#include "groverphase/full_state.hpp"
#include "groverphase/model.hpp"
#include "groverphase/spectral.hpp"

namespace grover {

// Which computation path produces amplitudes.
enum class Engine {
  kAuto,      // spectral closed form, falling back to iteration on degeneracy
  kReduced,   // repeated application of the 2x2 iteration matrix
  kSpectral,  // closed form only; degeneracy is an error
  kFull,      // brute-force N-dimensional simulation
};

// State after j applications, via the selected engine.
ReducedState state_after(const ProblemConfig& config, const ReducedState& initial,
                         std::size_t j, Engine engine = Engine::kAuto,
                         std::uint64_t max_n = kDefaultFullStateLimit);

// All states 0..j_max, via the selected engine.
Trajectory trajectory_by_engine(const ProblemConfig& config,
                                const ReducedState& initial, std::size_t j_max,
                                Engine engine = Engine::kAuto,
                                std::uint64_t max_n = kDefaultFullStateLimit);

struct ThetaWindow {
  double lo;
  double hi;
};

// |B| after a fixed number of applications, sampled over a theta grid.
struct ThetaSweep {
  std::uint64_t n;
  std::size_t applications;
  std::vector<double> grid;    // strictly increasing theta samples
  std::vector<double> values;  // |B_applications| at each sample
};

// Uniform grid grid[i] = lo + (i/points)*(hi - lo) for i = 0 .. points-1.
// The right endpoint is omitted: for the default full circle it duplicates
// theta = 0 by periodicity, and with an even point count theta = pi lands
// exactly on the grid. Starts from the uniform state.
ThetaSweep theta_sweep(std::uint64_t n, std::size_t applications,
                       std::size_t grid_points, ThetaWindow window = {0.0, kTwoPi},
                       Engine engine = Engine::kAuto);

struct PeakReport {
  std::size_t count;
  std::vector<double> locations;
  ThetaWindow window;
};

// Strict interior local maxima of sweep.values. A run of exactly equal values
// bounded by strictly smaller neighbors collapses to its leftmost index; only
// peaks with theta strictly inside window are counted. Throws when the window
// does not overlap the sampled grid.
PeakReport count_peaks(const ThetaSweep& sweep, ThetaWindow window);

struct TrajectoryStats {
  double max_norm;                  // max over j = 0 .. j_max (earliest j on ties)
  std::size_t argmax_j;
  double min_norm_excluding_start;  // min over j = 1 .. j_max (earliest j on ties)
  std::size_t argmin_j;
  std::vector<double> values;       // |B_j| for j = 0 .. j_max
};

// |B_j| statistics along a trajectory from the uniform start. j_max >= 1.
TrajectoryStats trajectory_stats(const ProblemConfig& config, std::size_t j_max);

// Plot-ready datasets, N = 100, uniform start:
//   1: |B| after 4 applications vs theta (2000-point circle grid)
//   2: |B| after 7 applications vs theta (2000-point circle grid)
//   3: |B| vs application count 1..101 at theta = pi/4
//   4: |B| vs application count 1..101 at theta = pi/3
//   5: |B| vs application count 1..101 at theta = pi/1.1
Table figure_dataset(int figure_id, Engine engine = Engine::kAuto);

}  // namespace grover
