#include <cmath>

#include "doctest.h"
#include "oracle_utils.hpp"
#include "wqd/influence.hpp"
#include "wqd/quadrature.hpp"

using wqd::influence_circular_harmonics;
using wqd::influence_m_frame;
using wqd::MotionProfile;
using wqd::SpectralDensity;
using wqd::SpectrumKind;
using wqd::Switching;
using wqd::TimeGrid;
using wqd::Worldline;

namespace {
SpectralDensity super_ohmic(double q = 1.0) {
  SpectralDensity s;
  s.kind = SpectrumKind::SuperOhmic;
  s.coupling = q;
  return s;
}
}  // namespace

TEST_CASE("stationary kernel and harmonic factorization agree") {
  const auto w = Worldline::make_circular(1.0, MotionProfile::constant(0.9));
  const auto spec = super_ohmic();
  const auto grid = TimeGrid::uniform(1.5, 0.005);
  const auto a = influence_m_frame(w, Switching::unity(), spec, grid, 2,
                                   nullptr, false);
  const auto b = influence_circular_harmonics(w, Switching::unity(), spec,
                                              grid, nullptr, false);
  for (double tau : {0.3, 0.9, 1.5}) {
    std::size_t k = static_cast<std::size_t>(tau / grid.step);
    CAPTURE(tau);
    CHECK(a.values[k] ==
          doctest::Approx(b.values[k]).epsilon(2.5e-3).scale(1e-10));
  }
}

TEST_CASE("harmonic route matches the brute-force double-time evaluation") {
  const auto w = Worldline::make_circular(1.0, MotionProfile::constant(0.7));
  const auto spec = super_ohmic();
  const double tau = 0.5;
  const auto grid = TimeGrid::uniform(tau, 0.0025);
  const auto s = influence_circular_harmonics(w, Switching::unity(), spec,
                                              grid, nullptr, false);
  const double brute =
      wqd::oracle::influence_circular_brute(w, Switching::unity(), spec, tau, 160);
  CHECK(s.values.back() == doctest::Approx(brute).epsilon(2e-3));
}

TEST_CASE("diametrically opposite modes share one influence functional") {
  // the pi phase offset must drop out of both evaluation routes
  const auto spec = super_ohmic();
  const auto grid = TimeGrid::uniform(2.0, 0.005);
  for (double om : {0.7, 0.9, 0.95}) {
    const auto m1 = Worldline::make_circular(1.0, MotionProfile::constant(om));
    const auto m2 =
        Worldline::make_circular(1.0, MotionProfile::constant(om), M_PI);
    const auto s1 = influence_m_frame(m1, Switching::unity(), spec, grid, 2,
                                      nullptr, false);
    const auto s2 = influence_m_frame(m2, Switching::unity(), spec, grid, 2,
                                      nullptr, false);
    const auto h2 = influence_circular_harmonics(m2, Switching::unity(), spec,
                                                 grid, nullptr, false);
    for (std::size_t k = 0; k < grid.size(); k += 40) {
      CHECK(s2.values[k] ==
            doctest::Approx(s1.values[k]).epsilon(1e-10).scale(1e-14));
      // the stationary route carries the double-time trapezoid's h^2 error
      CHECK(h2.values[k] ==
            doctest::Approx(s1.values[k]).epsilon(2.5e-3).scale(1e-10));
    }
  }
}

TEST_CASE("circular influence is non-positive and starts at zero") {
  const auto spec = super_ohmic();
  const auto grid = TimeGrid::uniform(1.0, 0.005);
  const auto fm = Worldline::make_circular(
      1.0, MotionProfile::cosine(0.95, 10.0), 0.0, 1.5);
  const auto s = influence_circular_harmonics(fm, Switching::unity(), spec,
                                              grid, nullptr, false);
  CHECK(s.values.front() == 0.0);
  for (double v : s.values) CHECK(v <= 0.0);
}

TEST_CASE("static worldline in two dimensions matches its analytic form") {
  const auto w = Worldline::make_static(2);
  const auto spec = super_ohmic();
  const auto grid = TimeGrid::uniform(1.0, 0.005);
  const auto s = influence_circular_harmonics(w, Switching::unity(), spec,
                                              grid, nullptr, false);
  for (double tau : {0.25, 0.6, 1.0}) {
    // -8 pi int_0^inf dw w A(w) (2 - 2 cos w tau)/w^2
    const auto f = [&](double om) {
      const double sn = std::sin(0.5 * om * tau);
      return spec(om) * 4.0 * sn * sn / om;
    };
    const double want =
        -8.0 * M_PI *
        wqd::frequency_integral(f, 0.0, spec.omega_max(), 1e-10).value;
    std::size_t k = static_cast<std::size_t>(tau / grid.step);
    CHECK(s.values[k] == doctest::Approx(want).epsilon(1e-5));
  }
}
