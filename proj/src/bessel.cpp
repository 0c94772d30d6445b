#include "wqd/bessel.hpp"

#include <cmath>

namespace wqd {

double bessel_j0(double x) {
  x = std::abs(x);
  if (x < 1e-8) return 1.0 - 0.25 * x * x;
  // Miller's downward recurrence with the even-order normalization; ~1e-13
  // over the argument range the kernels use, much faster than the library
  // call in the hot lag-kernel loop
  const int start = 18 + static_cast<int>(1.3 * x + 14.0 * std::cbrt(x));
  double jp = 0.0, jc = 1e-300, j0 = 0.0, norm = 0.0;
  for (int m = start; m >= 1; --m) {
    const double jm = (2.0 * m / x) * jc - jp;
    jp = jc;
    jc = jm;
    if (m - 1 == 0) j0 = jc;
    if ((m - 1) % 2 == 0) norm += (m - 1 == 0) ? jc : 2.0 * jc;
    if (std::abs(jc) > 1e250) {
      jc *= 1e-250;
      jp *= 1e-250;
      norm *= 1e-250;
      j0 *= 1e-250;
    }
  }
  return j0 / norm;
}

std::vector<double> bessel_j_array(double x, int mmax) {
  std::vector<double> j(mmax + 1, 0.0);
  if (x <= 0.0) {
    j[0] = 1.0;
    return j;
  }
  // start high enough above both mmax and the turning point m ~ x
  const int start =
      mmax + 16 + static_cast<int>(0.5 * x + 12.0 * std::cbrt(x > 1.0 ? x : 1.0));
  double jp = 0.0;         // J_{m+1}
  double jc = 1e-300;      // J_m (arbitrary seed, rescaled below)
  double norm = 0.0;       // accumulates J_0 + 2*sum_{k>=1} J_{2k}
  for (int m = start; m >= 1; --m) {
    const double jm = (2.0 * m / x) * jc - jp;
    jp = jc;
    jc = jm;
    if (m - 1 <= mmax) j[m - 1] = jc;
    if ((m - 1) % 2 == 0) norm += (m - 1 == 0) ? jc : 2.0 * jc;
    // rescale to dodge overflow in the unnormalized recurrence
    if (std::abs(jc) > 1e250) {
      jc *= 1e-250;
      jp *= 1e-250;
      norm *= 1e-250;
      for (double& v : j) v *= 1e-250;
    }
  }
  for (double& v : j) v /= norm;
  return j;
}

int bessel_truncation_order(double x) {
  if (x <= 0.0) return 0;
  return static_cast<int>(std::ceil(x + 12.0 * std::cbrt(x) + 14.0));
}

}  // namespace wqd
