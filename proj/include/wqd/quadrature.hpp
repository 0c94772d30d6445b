#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace wqd {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

// Uniform time grid with profile breakpoints spliced in as extra nodes.
struct TimeGrid {
  double tau_max = 0.0;
  double step = 0.0;  // base step of the uniform part
  std::vector<double> nodes;

  static TimeGrid uniform(double tau_max, double step,
                          std::span<const double> breakpoints = {});
  std::size_t size() const { return nodes.size(); }
};

// Adaptive Gauss-Kronrod 15(7) panel integration of f over [lo, hi].
// Seeds panels at the given interior breakpoints (IR cutoffs, omega = 0).
QuadResult frequency_integral(const std::function<double(double)>& f, double lo,
                              double hi, double rel_tol = 1e-7,
                              double abs_tol = 0.0,
                              std::span<const double> breakpoints = {},
                              int max_panels = 4000);

// Cumulative double-time integral S_k = int_0^{tau_k} int_0^{tau_k} K,
// for every grid node, built by adding one border row+column per step
// (Theta(N^2) kernel evaluations, not O(N^3)). K must be Hermitian,
// K(t', t'') = conj K(t'', t'); the result is real and an imaginary
// residue above 1e-6 of the magnitude raises ConventionError.
std::vector<double> cumulative_double_time(
    const std::function<std::complex<double>(double, double)>& kernel,
    const TimeGrid& grid, double* max_imag_residual = nullptr);

// Unit-sphere average of the plane wave exp(i omega n.dx) in d spatial
// dimensions: 2 cos(omega dx) for d = 1, 2 pi J0(omega |dx|) for d = 2.
std::complex<double> angular_kernel(int dim, double omega, double dx_abs);

// Nodes/weights of the 15-point Gauss-Kronrod rule mapped to [lo, hi]
// (exposed for the fixed-panel frequency grids).
void gauss_legendre7(double lo, double hi, double* nodes, double* weights);

}  // namespace wqd
