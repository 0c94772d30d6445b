#pragma once

namespace wqd {

enum class SwitchingKind { Unity, Gaussian, Cosine };

// Coupling modulation lambda(tau), always evaluated at the local proper time
// of the mode it belongs to.
struct Switching {
  SwitchingKind kind = SwitchingKind::Unity;
  double sigma = 1.0;    // Gaussian duration scale: exp(-tau^2/sigma^2)
  double omega_m = 0.0;  // cosine modulation: cos(omega_m tau)

  static Switching unity() { return {}; }
  static Switching gaussian(double sigma);
  static Switching cosine(double omega_m);

  double operator()(double tau) const;
};

}  // namespace wqd
