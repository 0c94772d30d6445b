#pragma once

#include <complex>

namespace wqd {

// Exponential integral E1(z) = int_1^inf exp(-z*u)/u du on the principal
// branch (cut along the negative real axis).
//
// Power series for |z| <= 4, modified-Lentz continued fraction otherwise;
// relative accuracy ~1e-13 over the arguments the influence integrals feed
// (purely imaginary and right-half-plane z). Throws DomainError at z = 0.
std::complex<double> e1(std::complex<double> z);

}  // namespace wqd
