#pragma once

#include <complex>
#include <span>
#include <vector>

namespace wqd {

// Two-level reduced state: rho11 = 1 - rho00, so trace is 1 by construction.
struct ReducedState {
  double rho00 = 1.0;
  std::complex<double> rho01 = 0.0;

  // positivity: (rho00 - 1/2)^2 + |rho01|^2 <= 1/4
  bool positive_semidefinite(double tol = 1e-12) const;
};

// Closed-form reduced dynamics from the pair of influence functionals:
//   rho00(t) = 1/2 + (rho00 - 1/2) e^{I1+I2}
//   rho01(t) = e^{I2} Re rho01 + i e^{I1} Im rho01
// Requires I1, I2 <= 0 (up to rounding).
ReducedState evolve(const ReducedState& initial, double influence1,
                    double influence2);

// Full transition probability 1/2 (1 - e^{I1+I2}) for the rho00 = 1 initial
// state; always in [0, 1/2].
double transition_prob_full(double influence1, double influence2);

// First-order (perturbative) transition probability -(I1+I2)/2. Diverges for
// non-switched scenarios as the influence keeps growing; the caller flags
// that case (see TransitionSummary in runner.hpp).
double transition_prob_first(double influence1, double influence2);

struct RateReport {
  std::vector<double> windows;  // T values
  std::vector<double> rates;    // P1(T)/T
  double extrapolated = 0.0;    // Richardson in 1/T from the last pair
  bool plateau = false;         // last two rates within 10%
};

// Transition rate from the first-order probability on a ladder of windows.
// `time` / `influence_sum` are the series grid and I1+I2 on it.
RateReport transition_rate(std::span<const double> time,
                           std::span<const double> influence_sum,
                           std::span<const double> windows);

// "t -> infinity" limits are taken as the last grid value; converged when
// the drift over the last 10% of the grid is below this tolerance.
bool series_converged(std::span<const double> values, double tol = 1e-3);

}  // namespace wqd
