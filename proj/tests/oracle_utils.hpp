// Independent oracles for the numerical test suite. Everything here avoids
// the production evaluation paths on purpose: plain trapezoid sums, brute
// adaptive quadrature and series, so the two routes share no code beyond the
// worldline/spectrum definitions themselves.
#pragma once

#include <complex>
#include <vector>

#include "wqd/spectra.hpp"
#include "wqd/switching.hpp"
#include "wqd/worldline.hpp"

namespace wqd::oracle {

// E1(z) by adaptive quadrature of exp(-z u)/u on [1, U] plus the divergent
// asymptotic tail series beyond U (|z U| >= 60 keeps the optimal truncation
// far below 1e-15).
std::complex<double> e1_brute(std::complex<double> z);

// J0 power series, usable for |x| <~ 12.
double j0_series(double x);

// Static-worldline influence in d = 1 via the analytic frequency reduction
//   I(tau) = -8 int_{-inf}^{inf} dw A(w) (1 - cos w tau)/w^2,
// evaluated on a dense fixed grid (Simpson).
double static_influence_freq(const wqd::SpectralDensity& spec, double tau);

// Direct double-time quadrature of the comoving-frame influence functional
// at fixed time step h: plain trapezoid transform per light-cone branch
// (cells whose phase advances more than pi per step are dropped, the plain
// discretization's version of truncating unresolvable oscillation), with an
// adaptive frequency integral outside. Independent of the production
// Gauss/boundary-term engine.
double influence_direct_quadrature(const wqd::Worldline& w,
                                   const wqd::Switching& sw,
                                   const wqd::SpectralDensity& spec,
                                   double tau, double h);

// Same bookkeeping for a time-mapped partner mode (tau2, dtau2 supplied).
double influence_direct_quadrature_mapped(
    const wqd::Worldline& w, const wqd::Switching& sw,
    const wqd::SpectralDensity& spec, double tau, double h,
    const std::vector<double>& tau2, const std::vector<double>& dtau2);

// Banded time-domain evaluation for the super-Ohmic spectrum: the analytic
// kernel K(x) = q^2 sqrt(pi)/2 (1 - L^2 x^2/2) exp(-L^2 x^2/4) dies beyond
// |x| ~ 14/L, so the double-time sum runs only over light-cone pairs inside
// that band. Exercises worldlines whose light-cone coordinate grows by many
// orders of magnitude.
double influence_banded_superohmic(const wqd::Worldline& w,
                                   const wqd::Switching& sw,
                                   const wqd::SpectralDensity& spec,
                                   double tau, double h);

// Generic circular-motion influence at one time by brute double-time sum
// with the 2 pi J0 angular kernel and an adaptive frequency integral per
// time pair; O(N^2) frequency integrals, keep N small.
double influence_circular_brute(const wqd::Worldline& w,
                                const wqd::Switching& sw,
                                const wqd::SpectralDensity& spec, double tau,
                                int n_steps);

}  // namespace wqd::oracle
