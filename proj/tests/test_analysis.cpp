#include <cmath>
#include <vector>

#include "doctest.h"
#include "wqd/analysis.hpp"
#include "wqd/errors.hpp"
#include "wqd/influence.hpp"

namespace {
std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}
}  // namespace

TEST_CASE("overtaking detector") {
  const auto tau = linspace(0.0, 4.0, 401);
  std::vector<double> a, b;
  for (double t : tau) {
    a.push_back(-t);             // linear decay
    b.push_back(-0.5 * t * t);   // quadratic: crosses at t = 2
  }
  SUBCASE("identical series never cross") {
    const auto rep = wqd::detect_overtaking(tau, a, a);
    CHECK(rep.crossings.empty());
  }
  SUBCASE("single crossing with interpolated location") {
    const auto rep = wqd::detect_overtaking(tau, a, b);
    REQUIRE(rep.crossings.size() == 1);
    CHECK(rep.crossings[0].tau_star == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(rep.crossings[0].lower_before == 0);  // a below b before the cross
    CHECK(rep.reversal_amplitude == doctest::Approx(4.0).epsilon(1e-6));
  }
  SUBCASE("antisymmetry under swapping the inputs") {
    const auto ab = wqd::detect_overtaking(tau, a, b);
    const auto ba = wqd::detect_overtaking(tau, b, a);
    REQUIRE(ab.crossings.size() == ba.crossings.size());
    for (std::size_t i = 0; i < ab.crossings.size(); ++i) {
      CHECK(ab.crossings[i].tau_star ==
            doctest::Approx(ba.crossings[i].tau_star).epsilon(1e-12));
      CHECK(ab.crossings[i].lower_before + ba.crossings[i].lower_before == 1);
    }
  }
  SUBCASE("mismatched grids are rejected") {
    std::vector<double> shorter(tau.begin(), tau.end() - 1);
    CHECK_THROWS_AS((void)wqd::detect_overtaking(shorter, a, b),
                    wqd::DomainError);
  }
}

TEST_CASE("backflow detector") {
  const auto tau = linspace(0.0, 6.0, 1201);
  SUBCASE("monotone decay has no backflow") {
    std::vector<double> coh;
    for (double t : tau) coh.push_back(std::exp(-t));
    CHECK(wqd::detect_backflow(tau, coh).intervals.empty());
  }
  SUBCASE("rebound above threshold is localized") {
    std::vector<double> coh;
    for (double t : tau) {
      coh.push_back(std::exp(-t) * (1.0 + 1.2 * std::exp(-8.0 * (t - 3.0) * (t - 3.0))));
    }
    const auto rep = wqd::detect_backflow(tau, coh, 1e-4);
    REQUIRE(rep.intervals.size() == 1);
    CHECK(rep.intervals[0].tau_begin > 2.0);
    CHECK(rep.intervals[0].tau_end < 3.1);
    CHECK(rep.max_rebound > 1e-4);
  }
  SUBCASE("sub-threshold ripples are ignored") {
    std::vector<double> coh;
    for (double t : tau) coh.push_back(std::exp(-t) + 2e-5 * std::sin(40.0 * t));
    CHECK(wqd::detect_backflow(tau, coh, 1e-3).intervals.empty());
  }
  SUBCASE("grid refinement does not move the detection") {
    const auto fine = linspace(0.0, 6.0, 2401);
    const auto shape = [](double t) {
      return std::exp(-t) * (1.0 + 1.2 * std::exp(-8.0 * (t - 3.0) * (t - 3.0)));
    };
    std::vector<double> c1, c2;
    for (double t : tau) c1.push_back(shape(t));
    for (double t : fine) c2.push_back(shape(t));
    const auto r1 = wqd::detect_backflow(tau, c1, 1e-4);
    const auto r2 = wqd::detect_backflow(fine, c2, 1e-4);
    REQUIRE(r1.intervals.size() == r2.intervals.size());
    CHECK(std::abs(r1.intervals[0].tau_begin - r2.intervals[0].tau_begin) <
          6.0 / 1200 + 1e-12);
  }
  SUBCASE("invalid threshold") {
    std::vector<double> coh(tau.size(), 1.0);
    CHECK_THROWS_AS((void)wqd::detect_backflow(tau, coh, 0.0),
                    wqd::DomainError);
  }
}

TEST_CASE("degenerate 1x1 region scan equals one detector call") {
  const auto eval = [](double sigma, double accel, std::vector<double>& tau) {
    tau = linspace(0.0, 5.0, 500);
    std::vector<double> coh;
    for (double t : tau) {
      const double bump =
          (sigma < 0.5 && accel < 5.0) ? 0.2 * std::exp(-10.0 * (t - 2.0) * (t - 2.0)) : 0.0;
      coh.push_back(std::exp(-t) + bump);
    }
    return coh;
  };
  const double sg[] = {0.2};
  const double ag[] = {2.0};
  const auto cells = wqd::backflow_region_scan(sg, ag, eval);
  REQUIRE(cells.size() == 1);
  REQUIRE(cells[0].size() == 1);
  std::vector<double> tau;
  const auto coh = eval(0.2, 2.0, tau);
  CHECK(cells[0][0] == !wqd::detect_backflow(tau, coh, 1e-4).intervals.empty());
  CHECK(cells[0][0]);
}

TEST_CASE("transition scan classification") {
  const auto grid = linspace(1.0, 10.0, 10);
  SUBCASE("monotone decrease") {
    const auto c = wqd::anti_unruh_scan(grid, [](double a) {
      const double p = 0.3 * std::exp(-0.2 * a);
      return std::make_pair(p, 1.1 * p);
    });
    CHECK(c.class_full == wqd::SlopeClass::Decreasing);
    CHECK(c.class_first == wqd::SlopeClass::Decreasing);
    CHECK(c.crossover_locations.empty());
  }
  SUBCASE("single crossover") {
    const auto c = wqd::anti_unruh_scan(grid, [](double a) {
      const double p = (a - 4.0) * (a - 4.0);
      return std::make_pair(p, p);
    });
    CHECK(c.class_full == wqd::SlopeClass::Crossover);
    REQUIRE(c.crossover_locations.size() == 1);
    CHECK(c.crossover_locations[0] > 3.0);
    CHECK(c.crossover_locations[0] < 5.0);
  }
  SUBCASE("median filter absorbs one-point noise") {
    const auto c = wqd::anti_unruh_scan(grid, [](double a) {
      double p = 1.0 + 0.1 * a;
      if (std::abs(a - 5.0) < 0.3) p += 0.2;  // single-cell glitch
      return std::make_pair(p, p);
    });
    CHECK(c.class_full == wqd::SlopeClass::Increasing);
  }
}

TEST_CASE("short-window accelerated pair shows backflow at the scan threshold") {
  // the rebound amplitude at (sigma, a) = (0.1, 1) converges to ~5e-5 in the
  // pair coherence; the region scan declares its threshold accordingly
  wqd::SpectralDensity spec;
  const auto w = wqd::Worldline::make_const_accel(1.0);
  const auto grid = wqd::TimeGrid::uniform(2.0, 0.005);
  const auto s = wqd::influence_m_frame(w, wqd::Switching::gaussian(0.1), spec,
                                        grid, 1, nullptr, false);
  std::vector<double> coh;
  for (double v : s.values) coh.push_back(std::exp(2.0 * v));
  CHECK(!wqd::detect_backflow(s.time, coh, 1e-5).intervals.empty());
}
