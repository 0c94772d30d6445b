#include "wqd/frames.hpp"

#include <cmath>

#include "wqd/errors.hpp"

namespace wqd {

MinkowskiPoint rindler_to_minkowski(double a, double tau, double xi) {
  if (!(a > 0.0)) throw DomainError("rindler_to_minkowski: a must be positive");
  if (!(xi > -1.0 / a)) {
    throw CausalityError("rindler_to_minkowski: xi <= -1/a is behind the horizon");
  }
  const double r = 1.0 / a + xi;
  return {r * std::sinh(a * tau), r * std::cosh(a * tau) - 1.0 / a};
}

double tau2_separation(double a, double l, double tau) {
  if (!(a > 0.0)) throw DomainError("tau2_separation: a must be positive");
  if (l < 0.0) throw DomainError("tau2_separation: separation must be >= 0");
  if (tau <= 0.0) return 0.0;
  return tau + std::asinh(a * l * std::sinh(a * tau)) / a;
}

double dtau2_separation(double a, double l, double tau) {
  const double s = a * l * std::sinh(a * tau);
  return 1.0 + a * l * std::cosh(a * tau) / std::sqrt(1.0 + s * s);
}

double tau2_two_accels(double a, double a2, double tau) {
  if (!(a > 0.0)) throw DomainError("tau2_two_accels: a must be positive");
  if (tau <= 0.0) return 0.0;
  if (a2 == 0.0) return std::tanh(a * tau) / a;  // inertial partner
  const double b = a2 / a - 1.0;
  return (a * tau + std::asinh(b * std::sinh(a * tau))) / a2;
}

double dtau2_two_accels(double a, double a2, double tau) {
  if (a2 == 0.0) {
    const double c = std::cosh(a * tau);
    return 1.0 / (c * c);
  }
  const double b = a2 / a - 1.0;
  const double s = b * std::sinh(a * tau);
  return (a / a2) * (1.0 + b * std::cosh(a * tau) / std::sqrt(1.0 + s * s));
}

double causal_domain_bound(double a, double a2) {
  if (!(a > 0.0)) throw DomainError("causal_domain_bound: a must be positive");
  if (a2 >= 0.0) return kUnbounded;
  return std::acosh(1.0 - a2 / a) / (-a2);
}

CircularShiftReport circular_tau_shift(double omega, double r0) {
  if (!(r0 > 0.0) || !(std::abs(r0 * omega) < 1.0)) {
    throw DomainError("circular_tau_shift: need r0 > 0 and r0*|Omega| < 1");
  }
  const double ro2 = r0 * r0 * omega * omega;
  const double gamma = 1.0 / std::sqrt(1.0 - ro2);
  const double go = gamma * omega;

  CircularShiftReport rep;
  rep.delta_explicit = (std::acos(1.0 - ro2) - M_PI) / go;

  // relation: delta / sin(gamma Omega delta + pi) = Omega r0^2 / gamma,
  // cleared of the 0/0 at delta = 0: h(delta) = delta + (Omega r0^2/gamma) sin(gamma Omega delta)
  const double rhs = omega * r0 * r0 / gamma;
  const auto ratio_residual = [&](double d) {
    return d / std::sin(go * d + M_PI) - rhs;
  };
  const auto cleared = [&](double d) { return d + rhs * std::sin(go * d); };

  rep.residual_explicit = ratio_residual(rep.delta_explicit);

  // h' = 1 + r0^2 Omega^2 cos(...) > 0 for subluminal motion, so the cleared
  // relation has exactly one root; bracket and bisect it anyway.
  double lo = -M_PI / go, hi = M_PI / go;
  if (cleared(lo) < 0.0 && cleared(hi) > 0.0) {
    for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + std::abs(hi)); ++it) {
      const double mid = 0.5 * (lo + hi);
      (cleared(mid) < 0.0 ? lo : hi) = mid;
    }
    rep.implicit_root = 0.5 * (lo + hi);
    rep.root_found = true;
    rep.root_slope = 1.0 + ro2 * std::cos(go * rep.implicit_root);
  }
  return rep;
}

}  // namespace wqd
