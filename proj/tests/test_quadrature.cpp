#include <cmath>
#include <complex>

#include "doctest.h"
#include "oracle_utils.hpp"
#include "wqd/errors.hpp"
#include "wqd/quadrature.hpp"
#include "wqd/spectra.hpp"

TEST_CASE("frequency_integral: gaussian") {
  const auto f = [](double w) { return std::exp(-w * w); };
  const auto q = wqd::frequency_integral(f, -8.0, 8.0, 1e-12);
  CHECK(q.converged);
  CHECK(q.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
}

TEST_CASE("frequency_integral: odd integrand vanishes") {
  const auto f = [](double w) { return w * std::exp(-std::abs(w)); };
  const auto q = wqd::frequency_integral(f, -30.0, 30.0, 1e-10, 1e-12);
  CHECK(std::abs(q.value) < 1e-10);
}

TEST_CASE("frequency_integral: uniform-spectrum kernel vs dense fixed grid") {
  wqd::SpectralDensity spec;
  spec.kind = wqd::SpectrumKind::Uniform;
  spec.lambda_ir = 0.02;
  const double tau = 1.0;
  const auto f = [&](double w) {
    if (w == 0.0) return 0.0;
    const double s = std::sin(0.5 * w * tau);
    return spec(w) * 2.0 * s * s / (w * w);
  };
  const double edges[] = {-spec.lambda_ir, spec.lambda_ir};
  const auto q = wqd::frequency_integral(f, -spec.omega_max(), spec.omega_max(),
                                         1e-9, 0.0, edges);
  CHECK(q.converged);
  // the same quantity through the independent dense-Simpson oracle
  const double want = wqd::oracle::static_influence_freq(spec, tau) / -8.0;
  CHECK(q.value == doctest::Approx(want).epsilon(1e-7));
}

TEST_CASE("frequency_integral flags non-convergence") {
  // |w|^{-1/2} endpoint singularity with a tiny panel budget
  const auto f = [](double w) { return 1.0 / std::sqrt(std::abs(w) + 1e-300); };
  const auto q = wqd::frequency_integral(f, 0.0, 1.0, 1e-12, 0.0, {}, 8);
  CHECK(!q.converged);
  CHECK(q.error_estimate > 0.0);
}

TEST_CASE("cumulative_double_time: unit kernel gives the square area") {
  const auto grid = wqd::TimeGrid::uniform(2.0, 0.01);
  const auto out = wqd::cumulative_double_time(
      [](double, double) { return std::complex<double>(1.0, 0.0); }, grid);
  CHECK(out.front() == 0.0);
  CHECK(out.back() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("cumulative_double_time: separable cosine kernel") {
  // K = cos(t'-t'') over [0,pi]^2 equals |int_0^pi e^{it} dt|^2 = 4
  const auto grid = wqd::TimeGrid::uniform(M_PI, 0.002);
  const auto out = wqd::cumulative_double_time(
      [](double a, double b) {
        return std::complex<double>(std::cos(a - b), 0.0);
      },
      grid);
  CHECK(out.back() == doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("cumulative_double_time: static super-Ohmic kernel vs frequency oracle") {
  wqd::SpectralDensity spec;  // super-Ohmic defaults
  const double tau = 1.0;
  // kernel: int dw A(w) e^{-iw dt} * (angular kernel 2) = 4 int_0^inf A cos(w dt)
  const auto kernel = [&](double a, double b) {
    const double dt = a - b;
    const auto f = [&](double w) { return spec(w) * std::cos(w * dt); };
    return std::complex<double>(
        4.0 * wqd::frequency_integral(f, 0.0, spec.omega_max(), 1e-10).value,
        0.0);
  };
  const double want = wqd::oracle::static_influence_freq(spec, tau);
  const auto influence_at = [&](double h) {
    const auto grid = wqd::TimeGrid::uniform(tau, h);
    return -2.0 * wqd::cumulative_double_time(kernel, grid).back();
  };
  const double coarse = influence_at(0.005);
  const double fine = influence_at(0.0025);
  CHECK(fine == doctest::Approx(want).epsilon(1e-4));
  // trapezoid discretization: halving the step divides the defect by ~4
  const double ratio = std::abs(coarse - want) / std::abs(fine - want);
  CHECK(ratio > 2.5);
  CHECK(ratio < 6.5);
}

TEST_CASE("cumulative_double_time performs Theta(N^2) kernel evaluations") {
  const auto grid = wqd::TimeGrid::uniform(1.0, 0.02);
  const std::size_t n = grid.size();
  std::size_t count = 0;
  (void)wqd::cumulative_double_time(
      [&count](double, double) {
        ++count;
        return std::complex<double>(1.0, 0.0);
      },
      grid);
  CHECK(count == n * n);
}

TEST_CASE("cumulative_double_time rejects non-Hermitian kernels") {
  const auto grid = wqd::TimeGrid::uniform(1.0, 0.1);
  CHECK_THROWS_AS(
      (void)wqd::cumulative_double_time(
          [](double a, double b) { return std::complex<double>(1.0, a + b); },
          grid),
      wqd::ConventionError);
}

TEST_CASE("angular kernel values") {
  CHECK(wqd::angular_kernel(1, 3.0, 0.0).real() == doctest::Approx(2.0));
  CHECK(wqd::angular_kernel(2, 3.0, 0.0).real() ==
        doctest::Approx(2.0 * M_PI).epsilon(1e-12));
  CHECK(wqd::angular_kernel(1, 2.0, 0.25).real() ==
        doctest::Approx(2.0 * std::cos(0.5)).epsilon(1e-13));
  CHECK_THROWS_AS((void)wqd::angular_kernel(3, 1.0, 0.0), wqd::DomainError);

  // first zero of J0, bracketed with the independent series
  double lo = 2.0, hi = 3.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (wqd::oracle::j0_series(mid) > 0.0 ? lo : hi) = mid;
  }
  const double x0 = 0.5 * (lo + hi);
  CHECK(x0 == doctest::Approx(2.404825557695773).epsilon(1e-10));
  CHECK(std::abs(wqd::angular_kernel(2, x0, 1.0).real()) < 1e-9);
}

TEST_CASE("TimeGrid splices breakpoints") {
  const double bp[] = {0.3, 0.5, 0.7};
  const auto grid = wqd::TimeGrid::uniform(1.0, 0.004, bp);
  // 0.3/0.004 = 75 exactly: dedup keeps one node there
  int hits = 0;
  for (double x : grid.nodes) {
    if (std::abs(x - 0.3) < 1e-12 || std::abs(x - 0.5) < 1e-12 ||
        std::abs(x - 0.7) < 1e-12) {
      ++hits;
    }
  }
  CHECK(hits == 3);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    CHECK(grid.nodes[k] > grid.nodes[k - 1]);
  }
  const double bp2[] = {0.37719};
  const auto g2 = wqd::TimeGrid::uniform(1.0, 0.004, bp2);
  CHECK(g2.size() == grid.size() + 1);  // lands between uniform nodes
  bool found = false;
  for (double x : g2.nodes) found = found || x == 0.37719;
  CHECK(found);
}
