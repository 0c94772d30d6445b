#pragma once

#include <vector>

namespace wqd {

// J_0(x), x >= 0.
double bessel_j0(double x);

// J_m(x) for m = 0..mmax by Miller's downward recurrence, normalized with
// J_0 + 2*sum J_2k = 1. Accurate to ~1e-13 for the x <= few hundred range
// the circular-motion kernels use.
std::vector<double> bessel_j_array(double x, int mmax);

// Smallest M with sum_{|m|>M} J_m(x)^2 below ~1e-14: the angular harmonics
// cutoff for the circular-motion factorization.
int bessel_truncation_order(double x);

}  // namespace wqd
