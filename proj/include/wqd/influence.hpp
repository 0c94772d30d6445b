#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "wqd/quadrature.hpp"
#include "wqd/spectra.hpp"
#include "wqd/switching.hpp"
#include "wqd/worldline.hpp"

namespace wqd {

enum class Frame { M, E, Thermal };
const char* frame_name(Frame f);

struct InfluenceSeries {
  Frame frame = Frame::M;
  std::vector<double> time;    // observer time at the grid nodes
  std::vector<double> values;  // I(t_k): starts at 0, stays <= 0
  std::vector<double> exp_values;
  double error_estimate = 0.0;  // relative, from a coarsened frequency grid
  bool truncated_causal = false;
  double causal_bound_time = std::numeric_limits<double>::infinity();
};

// Proper-time relation of an incoherently moving partner mode, as seen from
// the observer clock the grid is built on. tau2 must be increasing with
// dtau2 > 0 (causal); grid nodes where tau2 exceeds tau2_bound are truncated
// and flagged.
struct TimeMap {
  std::function<double(double)> tau2;
  std::function<double(double)> dtau2;
  double tau2_bound = std::numeric_limits<double>::infinity();
};

// Influence functional in the frame comoving with a Majorana mode, on the
// given proper-time grid. `map` relabels the partner worldline's proper time
// when the two modes move incoherently; switching functions are always
// evaluated at the mode's own proper time. dim = 1 integrates the two
// light-cone branches; dim = 2 (circular worldlines) goes through the
// Bessel-kernel machinery.
InfluenceSeries influence_m_frame(const Worldline& w, const Switching& sw,
                                  const SpectralDensity& spec,
                                  const TimeGrid& grid, int dim,
                                  const TimeMap* map = nullptr,
                                  bool with_error_estimate = true);

// Influence functional for an observer static with respect to the
// environment; the grid is in coordinate time and the integrand carries the
// dtau/dt Jacobians.
InfluenceSeries influence_e_frame(const Worldline& w, const Switching& sw,
                                  const SpectralDensity& spec,
                                  const TimeGrid& coord_grid, int dim,
                                  bool with_error_estimate = true);

// Circular-motion evaluation through the angular-harmonics factorization
// (the generic-profile d = 2 route). Constant-velocity cases normally go
// through the stationary lag kernel instead; this entry point makes the two
// routes independently callable for cross-checks.
InfluenceSeries influence_circular_harmonics(const Worldline& w,
                                             const Switching& sw,
                                             const SpectralDensity& spec,
                                             const TimeGrid& grid,
                                             const TimeMap* map = nullptr,
                                             bool with_error_estimate = true);

// Thermal-environment influence functional at temperature T:
//   I(t) = -8 int dw [1+2n(w)] sgn(w) A(w) (1 - cos w t)/w^2 ,
// which reduces to the static vacuum result at T = 0.
InfluenceSeries influence_thermal(const SpectralDensity& spec,
                                  double temperature, const TimeGrid& grid,
                                  double rel_tol = 1e-9);
double influence_thermal_value(const SpectralDensity& spec, double temperature,
                               double t, double rel_tol = 1e-9);

// Closed form for constant acceleration via the exponential integral:
//   I(tau) = -(2/a^2) int dw A(w) [ |E1(iw/a) - E1(iw/a e^{-a tau})|^2
//                                 + |E1(-iw/a) - E1(-iw/a e^{a tau})|^2 ].
// The direct double-time quadrature of the comoving-frame formula carries a
// -2 prefactor and a two-branch light-cone kernel; this expression is its
// exact frequency-domain reduction and the two routes are cross-checked in
// the acceptance suite.
double influence_const_accel_closed(double a, const SpectralDensity& spec,
                                    double tau, double rel_tol = 1e-9);

// Fixed Gauss-Legendre panel grid in frequency. Panel widths track the
// resolved phase horizon U(w): only integrand content the time-grid engine
// resolves at frequency w can ripple |F(w)|^2, so the width pi/U(w) grows as
// the engine's per-cell truncation bites at high frequency. For accelerated
// worldlines U(w) ~ 1/w and the grid stays geometric instead of exploding
// with the exponential light-cone span.
struct OmegaGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
};
OmegaGrid build_omega_grid(const SpectralDensity& spec,
                           const std::function<double(double)>& resolved_u,
                           double panel_scale = 1.0);
OmegaGrid build_omega_grid(const SpectralDensity& spec, double u_res,
                           double panel_scale = 1.0);

}  // namespace wqd
