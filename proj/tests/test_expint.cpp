#include <cmath>
#include <complex>

#include "doctest.h"
#include "oracle_utils.hpp"
#include "wqd/errors.hpp"
#include "wqd/expint.hpp"

using cplx = std::complex<double>;

TEST_CASE("e1 at real argument 1 matches the brute-force integral") {
  // frozen from the [1,inf) quadrature oracle
  CHECK(wqd::e1(cplx(1.0, 0.0)).real() ==
        doctest::Approx(0.21938393439552027).epsilon(1e-12));
  CHECK(std::abs(wqd::e1(cplx(1.0, 0.0)) - wqd::oracle::e1_brute(1.0)) < 1e-12);
}

TEST_CASE("e1 matches the oracle on the magnitude/phase test set") {
  const double mags[] = {0.1, 0.9, 4.5, 16.0, 50.0};
  const double args[] = {0.0, M_PI_4, -M_PI_4, M_PI_2, -M_PI_2};
  for (double m : mags) {
    for (double a : args) {
      const cplx z = std::polar(m, a);
      const cplx got = wqd::e1(z);
      const cplx want = wqd::oracle::e1_brute(z);
      CAPTURE(m);
      CAPTURE(a);
      CHECK(std::abs(got - want) <= 1e-10 * (1.0 + std::abs(want)));
    }
  }
}

TEST_CASE("e1 obeys Schwarz reflection off the cut") {
  for (const cplx z : {cplx(0.3, 0.7), cplx(2.0, -3.0), cplx(8.0, 5.0),
                       cplx(0.01, 40.0)}) {
    const cplx a = wqd::e1(std::conj(z));
    const cplx b = std::conj(wqd::e1(z));
    CHECK(std::abs(a - b) <= 1e-13 * (1.0 + std::abs(b)));
  }
}

TEST_CASE("e1 leading asymptotic along the imaginary axis") {
  for (double y : {50.0, 400.0, 3000.0}) {
    const cplx z(0.0, y);
    const cplx lhs = z * std::exp(z) * wqd::e1(z);
    CHECK(std::abs(lhs - 1.0) < 5.0 / y);
  }
}

TEST_CASE("e1 rejects the origin") {
  CHECK_THROWS_AS((void)wqd::e1(cplx(0.0, 0.0)), wqd::DomainError);
}
