#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grover {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

// The self-contained verification suite: nine checks covering the reference
// reduction at theta = pi, cross-engine agreement, the eigenphase sum rule,
// the amplitude-range and periodicity behavior at pi/4 and pi/3, sweep peak
// counts, the near-pi regression value, structural invariants (unitarity,
// involution, norm and symmetry conservation), and the dense diffusion
// cross-check. Pure computation, runs in seconds.
std::vector<CheckResult> run_verification();

// Quantifies the 2*sqrt(N-2)/N variant of the A-row coefficient against the
// standard sin(psi) = 2*sqrt(N-1)/N one.
struct CoefficientDiagnostic {
  double variant_coefficient;          // 2*sqrt(N-2)/N
  double standard_coefficient;         // sin(psi)
  double variant_unitarity_defect;     // max entry of |M^dagger M - I|
  double variant_one_step_deviation;   // vs one full-simulation step, uniform start
  double standard_one_step_deviation;  // same for the standard matrix
};

CoefficientDiagnostic nm2_coefficient_diagnostic(std::uint64_t n, double theta);

}  // namespace grover
