#include <cmath>

#include "doctest.h"
#include "wqd/bessel.hpp"

TEST_CASE("bessel_j_array matches the standard library") {
  for (double x : {0.2, 1.0, 7.3, 31.0, 120.0}) {
    const int mmax = wqd::bessel_truncation_order(x);
    const auto j = wqd::bessel_j_array(x, mmax);
    for (int m = 0; m <= mmax; m += std::max(1, mmax / 9)) {
      const double want = std::cyl_bessel_j(static_cast<double>(m), x);
      CHECK(std::abs(j[m] - want) < 1e-12);
    }
  }
}

TEST_CASE("bessel_j_array at x = 0") {
  const auto j = wqd::bessel_j_array(0.0, 5);
  CHECK(j[0] == 1.0);
  for (int m = 1; m <= 5; ++m) CHECK(j[m] == 0.0);
}

TEST_CASE("truncation order captures the J_m^2 sum") {
  for (double x : {0.5, 12.0, 65.0}) {
    const int mmax = wqd::bessel_truncation_order(x);
    const auto j = wqd::bessel_j_array(x, mmax + 40);
    // total: J_0^2 + 2 sum_{m>=1} J_m^2 = 1
    double beyond = 0.0;
    for (int m = mmax + 1; m <= mmax + 40; ++m) beyond += 2.0 * j[m] * j[m];
    CHECK(beyond < 1e-13);
  }
}

TEST_CASE("bessel_j0 matches the standard library across the kernel range") {
  for (double x = 0.0; x < 140.0; x += 0.0937) {
    CHECK(wqd::bessel_j0(x) ==
          doctest::Approx(std::cyl_bessel_j(0.0, x)).epsilon(1e-10).scale(1.0));
  }
}
