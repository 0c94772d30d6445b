#include <cmath>
#include <random>

#include "doctest.h"
#include "wqd/dynamics.hpp"
#include "wqd/errors.hpp"

using wqd::evolve;
using wqd::ReducedState;

TEST_CASE("zero influence leaves the state untouched") {
  const ReducedState rho0{0.7, {0.2, -0.1}};
  const ReducedState rho = evolve(rho0, 0.0, 0.0);
  CHECK(rho.rho00 == doctest::Approx(0.7));
  CHECK(rho.rho01.real() == doctest::Approx(0.2));
  CHECK(rho.rho01.imag() == doctest::Approx(-0.1));
}

TEST_CASE("complete decoherence reaches the maximally mixed state") {
  const ReducedState rho0{1.0, {0.4, 0.3}};
  const ReducedState rho = evolve(rho0, -400.0, -350.0);
  CHECK(rho.rho00 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(rho.rho01) < 1e-100);
}

TEST_CASE("half-life example") {
  const ReducedState rho0{1.0, {0.0, 0.0}};
  const ReducedState rho = evolve(rho0, -0.5 * std::log(2.0), -0.5 * std::log(2.0));
  CHECK(rho.rho00 == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("positive influence input is rejected") {
  CHECK_THROWS_AS((void)evolve(ReducedState{}, 0.1, -0.2), wqd::DomainError);
}

TEST_CASE("evolution preserves hermiticity, trace and positivity") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    // random valid initial state: point inside the Bloch ball
    const double r = unif(rng) * 0.5;
    const double phi = unif(rng) * 2.0 * M_PI;
    const double z = (unif(rng) - 0.5);
    const double scale = 0.5 / std::sqrt(0.25 + z * z);
    ReducedState rho0;
    rho0.rho00 = 0.5 + z * r * scale;
    rho0.rho01 = std::polar(r * scale * 0.5, phi);
    REQUIRE(rho0.positive_semidefinite());
    const double i1 = -3.0 * unif(rng);
    const double i2 = -3.0 * unif(rng);
    const ReducedState rho = evolve(rho0, i1, i2);
    CHECK(rho.positive_semidefinite());
    CHECK(rho.rho00 >= 0.0);
    CHECK(rho.rho00 <= 1.0);
  }
}

TEST_CASE("coherence magnitude tracks the influence monotonicity") {
  // for a real-valued rho01 the off-diagonal is e^{I2} Re rho01: any rebound
  // of e^{I} shows up verbatim in |rho01|
  const ReducedState rho0{0.5, {0.5, 0.0}};
  const double rebounding[] = {0.0, -0.5, -1.0, -0.8, -1.5};
  double prev = std::abs(evolve(rho0, rebounding[0], rebounding[0]).rho01);
  std::vector<int> signs;
  for (int k = 1; k < 5; ++k) {
    const double cur = std::abs(evolve(rho0, rebounding[k], rebounding[k]).rho01);
    signs.push_back(cur > prev ? 1 : -1);
    prev = cur;
  }
  CHECK(signs == std::vector<int>{-1, -1, 1, -1});
}

TEST_CASE("full transition probability") {
  CHECK(wqd::transition_prob_full(0.0, 0.0) == 0.0);
  CHECK(wqd::transition_prob_full(-0.1, -0.1) ==
        doctest::Approx(0.5 * (1.0 - std::exp(-0.2))).epsilon(1e-14));
  CHECK(wqd::transition_prob_full(-600.0, -600.0) == doctest::Approx(0.5));
  for (double i1 : {0.0, -0.3, -2.0, -40.0}) {
    const double p = wqd::transition_prob_full(i1, 2.0 * i1);
    CHECK(p >= 0.0);
    CHECK(p <= 0.5);
  }
}

TEST_CASE("first-order transition probability") {
  CHECK(wqd::transition_prob_first(0.0, 0.0) == 0.0);
  CHECK(wqd::transition_prob_first(-0.1, -0.3) == doctest::Approx(0.2));
  // may exceed 1/2: the perturbative expression is unbounded
  CHECK(wqd::transition_prob_first(-3.0, -3.0) == doctest::Approx(3.0));
}

TEST_CASE("transition rate ladder") {
  // bounded influence (static-like plateau): rate decays toward zero
  std::vector<double> time, isum;
  for (int k = 0; k <= 4000; ++k) {
    const double t = 0.01 * k;
    time.push_back(t);
    isum.push_back(-2.0 * (1.0 - std::exp(-t)));  // plateaus at -2
  }
  const double windows[] = {10.0, 20.0, 40.0};
  const auto rep = wqd::transition_rate(time, isum, windows);
  REQUIRE(rep.rates.size() == 3);
  CHECK(rep.rates[0] > rep.rates[1]);
  CHECK(rep.rates[1] > rep.rates[2]);
  CHECK(rep.extrapolated == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));

  // zero coupling: identically zero rate
  std::vector<double> zeros(time.size(), 0.0);
  const auto rep0 = wqd::transition_rate(time, zeros, windows);
  for (double r : rep0.rates) CHECK(r == 0.0);

  // linear growth (thermalizing): plateau at half the slope
  std::vector<double> lin;
  for (double t : time) lin.push_back(-0.3 * t);
  const auto repl = wqd::transition_rate(time, lin, windows);
  CHECK(repl.plateau);
  CHECK(repl.extrapolated == doctest::Approx(0.15).epsilon(1e-9));
}

TEST_CASE("series convergence flag") {
  std::vector<double> flat(200, -1.0);
  CHECK(wqd::series_converged(flat));
  std::vector<double> drift;
  for (int k = 0; k < 200; ++k) drift.push_back(-0.1 * k);
  CHECK(!wqd::series_converged(drift));
}
