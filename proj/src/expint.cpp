#include "wqd/expint.hpp"

#include <cmath>

#include "wqd/errors.hpp"

namespace wqd {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// E1(z) = -gamma - log z + sum_{k>=1} (-1)^{k+1} z^k / (k k!)
std::complex<double> e1_series(std::complex<double> z) {
  std::complex<double> term(1.0, 0.0);
  std::complex<double> sum(0.0, 0.0);
  for (int k = 1; k <= 64; ++k) {
    term *= -z / static_cast<double>(k);
    const std::complex<double> add = -term / static_cast<double>(k);
    sum += add;
    if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return -kEulerGamma - std::log(z) + sum;
}

// E1(z) = exp(-z) / (z + 1 - 1/(z + 3 - 4/(z + 5 - 9/(...)))), evaluated
// with the modified Lentz scheme.
std::complex<double> e1_contfrac(std::complex<double> z) {
  constexpr double kTiny = 1e-290;
  std::complex<double> b = z + 1.0;
  std::complex<double> c(1.0 / kTiny, 0.0);
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int i = 1; i <= 400; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const std::complex<double> del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-z);
}

}  // namespace

std::complex<double> e1(std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) {
    throw DomainError("e1: logarithmic singularity at z = 0");
  }
  return (std::abs(z) <= 4.0) ? e1_series(z) : e1_contfrac(z);
}

}  // namespace wqd
