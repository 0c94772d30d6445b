#include "wqd/switching.hpp"

#include <cmath>

#include "wqd/errors.hpp"

namespace wqd {

Switching Switching::gaussian(double sigma) {
  if (!(sigma > 0.0)) throw DomainError("Switching: gaussian sigma must be positive");
  Switching s;
  s.kind = SwitchingKind::Gaussian;
  s.sigma = sigma;
  return s;
}

Switching Switching::cosine(double omega_m) {
  Switching s;
  s.kind = SwitchingKind::Cosine;
  s.omega_m = omega_m;
  return s;
}

double Switching::operator()(double tau) const {
  switch (kind) {
    case SwitchingKind::Unity:
      return 1.0;
    case SwitchingKind::Gaussian: {
      const double r = tau / sigma;
      return std::exp(-r * r);
    }
    case SwitchingKind::Cosine:
      return std::cos(omega_m * tau);
  }
  return 1.0;
}

}  // namespace wqd
