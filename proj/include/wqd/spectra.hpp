#pragma once

namespace wqd {

enum class SpectrumKind { Uniform, Ohmic, SubOhmic, SuperOhmic };

// Particle-hole symmetric environmental spectral density A(omega).
//
//   Uniform:     q^2/|w|                      for |w| > lambda_ir, else 0
//   Ohmic:       q^2/|w| (|w|/L_uv)^2  e^{-w^2/L_uv^2}
//   Sub-Ohmic:   q^2/|w| (|w|/L_uv)^1.5 e^{-w^2/L_uv^2}
//   Super-Ohmic: q^2/|w| (|w|/L_uv)^3  e^{-w^2/L_uv^2}
struct SpectralDensity {
  SpectrumKind kind = SpectrumKind::SuperOhmic;
  double coupling = 1.0;     // q
  double lambda_ir = 0.02;   // IR cutoff (uniform spectrum only)
  double lambda_uv = 10.0;   // UV scale
  // Uniform-spectrum truncation in units of lambda_uv. Sized so the 1/w^3
  // integrand tails stay below the boost-invariance tolerances even when
  // motion blueshifts the sampled content by the Doppler factor.
  double lambda_max_factor = 30.0;

  double operator()(double omega) const;

  // Upper truncation of frequency integrals: the Gaussian tail of the Ohmic
  // family is below machine epsilon past L_uv*sqrt(ln 1/eps); the uniform
  // spectrum is cut at lambda_max_factor * lambda_uv.
  double omega_max() const;

  // Integration panel edges other than 0 (the uniform IR gap).
  double ir_edge() const { return kind == SpectrumKind::Uniform ? lambda_ir : 0.0; }

  // Support of the time-domain kernel (the Fourier transform of A): phase
  // content separated by more than this cannot interfere. Finite only for
  // the super-Ohmic weight, whose transform decays like a gaussian; the
  // other kinds have kinks at w = 0 and power-law kernel tails.
  double kernel_support() const;
};

// [1 + 2 n(omega)] sgn(omega) for Bose-Einstein occupation at temperature T:
// coth(omega/2T) sgn(omega) for T > 0, the T = 0 limit is 1 for omega != 0.
// Returns 0 at omega = 0 (frequency grids exclude that node).
double thermal_factor(double temperature, double omega);

}  // namespace wqd
