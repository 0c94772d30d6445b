#include "wqd/spectra.hpp"

#include <cmath>
#include <limits>

#include "wqd/errors.hpp"

namespace wqd {

double SpectralDensity::operator()(double omega) const {
  const double w = std::abs(omega);
  const double q2 = coupling * coupling;
  switch (kind) {
    case SpectrumKind::Uniform:
      return (w > lambda_ir) ? q2 / w : 0.0;
    case SpectrumKind::Ohmic: {
      if (w == 0.0) return 0.0;
      const double r = w / lambda_uv;
      return q2 / w * (r * r) * std::exp(-r * r);
    }
    case SpectrumKind::SubOhmic: {
      if (w == 0.0) return 0.0;
      const double r = w / lambda_uv;
      return q2 / w * (r * std::sqrt(r)) * std::exp(-r * r);
    }
    case SpectrumKind::SuperOhmic: {
      if (w == 0.0) return 0.0;
      const double r = w / lambda_uv;
      return q2 / w * (r * r * r) * std::exp(-r * r);
    }
  }
  throw DomainError("SpectralDensity: unknown kind");
}

double SpectralDensity::omega_max() const {
  if (kind == SpectrumKind::Uniform) return lambda_max_factor * lambda_uv;
  // exp(-w^2/L^2) < 1e-17 beyond w = L*sqrt(39); small margin on top
  return lambda_uv * 6.5;
}

double SpectralDensity::kernel_support() const {
  // only the super-Ohmic weight w^2 exp(-w^2/L^2) transforms to a compactly
  // decaying kernel; the |w| and |w|^(1/2) kinks of the other kinds leave
  // power-law tails, and the uniform spectrum decays like 1/x
  if (kind == SpectrumKind::SuperOhmic) return 14.0 / lambda_uv;
  return std::numeric_limits<double>::infinity();
}

double thermal_factor(double temperature, double omega) {
  if (omega == 0.0) return 0.0;
  if (temperature <= 0.0) return 1.0;
  const double x = std::abs(omega) / (2.0 * temperature);
  // coth(|x|); large-x branch avoids overflow in cosh/sinh
  if (x > 20.0) return 1.0;
  return std::cosh(x) / std::sinh(x);
}

}  // namespace wqd
