#pragma once

#include <limits>

namespace wqd {

struct MinkowskiPoint {
  double t = 0.0;
  double x = 0.0;
};

// Rindler chart of an observer with proper acceleration a:
//   t = (1/a + xi) sinh(a tau),  x = (1/a + xi) cosh(a tau) - 1/a.
// Requires xi > -1/a (Rindler horizon); xi = 0 is the observer worldline.
MinkowskiPoint rindler_to_minkowski(double a, double tau, double xi);

// Partner proper time tau2 as a function of the observer's Rindler time tau,
// for a partner with the same acceleration a but initial separation L:
//   tau2 = tau + asinh(a L sinh(a tau)) / a
// (the log form of the textbook expression, stable for large a tau).
double tau2_separation(double a, double l, double tau);
double dtau2_separation(double a, double l, double tau);

// Same for a partner with a different acceleration a2 (a2 = 0 degenerates to
// the inertial-partner limit tanh(a tau)/a).
double tau2_two_accels(double a, double a2, double tau);
double dtau2_two_accels(double a, double a2, double tau);

// Upper bound on tau2 imposed by the Rindler horizon: unbounded for a2 >= 0,
// arccosh(1 - a2/a)/|a2| for a2 < 0.
double causal_domain_bound(double a, double a2);

// Constant shift between the proper times of two diametrically opposite
// modes in coherent circular motion, plus diagnostics for the transcendental
// relation it should satisfy. The explicit shift and the relation disagree
// (the relation's only root with r0 Omega < 1 is delta = 0); both are
// reported and nothing downstream consumes the shift -- the coherent-motion
// influence functionals are equal by the angle-translation argument alone.
struct CircularShiftReport {
  double delta_explicit = 0.0;   // [arccos(1 - r0^2 Omega^2) - pi]/(gamma Omega)
  double residual_explicit = 0.0;  // relation residual at delta_explicit
  double implicit_root = 0.0;      // nearest root of the cleared relation
  bool root_found = false;
  double root_slope = 0.0;         // d/d delta of the cleared relation at the root
};
CircularShiftReport circular_tau_shift(double omega, double r0);

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

}  // namespace wqd
