#include <cmath>

#include "doctest.h"
#include "wqd/quadrature.hpp"
#include "wqd/spectra.hpp"

namespace {
wqd::SpectralDensity make(wqd::SpectrumKind kind, double q = 1.0) {
  wqd::SpectralDensity s;
  s.kind = kind;
  s.coupling = q;
  return s;
}
}  // namespace

TEST_CASE("spectral density pointwise values") {
  const auto uni = make(wqd::SpectrumKind::Uniform);
  CHECK(uni(0.01) == 0.0);  // inside the IR gap
  CHECK(uni(0.5) == doctest::Approx(2.0));

  const auto sup = make(wqd::SpectrumKind::SuperOhmic);
  CHECK(sup(10.0) == doctest::Approx(0.1 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(sup(0.0) == 0.0);

  const auto ohm = make(wqd::SpectrumKind::Ohmic);
  CHECK(ohm(-5.0) == doctest::Approx(ohm(5.0)).epsilon(1e-15));
  CHECK(ohm(5.0) == doctest::Approx(0.05 * std::exp(-0.25)).epsilon(1e-14));

  const auto sub = make(wqd::SpectrumKind::SubOhmic, 2.0);
  CHECK(sub(2.5) ==
        doctest::Approx(4.0 / 2.5 * std::pow(0.25, 1.5) * std::exp(-0.0625))
            .epsilon(1e-13));
}

TEST_CASE("spectral density is even and non-negative") {
  for (auto kind : {wqd::SpectrumKind::Uniform, wqd::SpectrumKind::Ohmic,
                    wqd::SpectrumKind::SubOhmic, wqd::SpectrumKind::SuperOhmic}) {
    const auto s = make(kind, 0.7);
    for (double w = -40.0; w <= 40.0; w += 0.37) {
      CHECK(s(w) >= 0.0);
      CHECK(s(w) == doctest::Approx(s(-w)).epsilon(1e-15).scale(1e-300));
    }
  }
}

TEST_CASE("frequency moments used by the scenarios are finite") {
  for (auto kind : {wqd::SpectrumKind::Uniform, wqd::SpectrumKind::Ohmic,
                    wqd::SpectrumKind::SubOhmic, wqd::SpectrumKind::SuperOhmic}) {
    const auto s = make(kind);
    for (int d = 1; d <= 2; ++d) {
      const auto f = [&](double w) { return std::pow(std::abs(w), d - 1) * s(w); };
      const double edges[] = {s.ir_edge()};
      const auto q = wqd::frequency_integral(f, 0.0, s.omega_max(), 1e-8, 1e-10,
                                             edges);
      CHECK(q.converged);
      CHECK(std::isfinite(q.value));
    }
  }
}

TEST_CASE("thermal factor") {
  CHECK(wqd::thermal_factor(0.0, 3.0) == 1.0);
  CHECK(wqd::thermal_factor(0.0, -3.0) == 1.0);
  const double t = 5.0 / (2.0 * M_PI);  // temperature of acceleration a = 5
  CHECK(wqd::thermal_factor(t, 1.0) ==
        doctest::Approx(1.0 / std::tanh(M_PI / 5.0)).epsilon(1e-13));
  for (double w : {0.3, 1.7, 12.0}) {
    CHECK(wqd::thermal_factor(0.8, w) == wqd::thermal_factor(0.8, -w));
    CHECK(wqd::thermal_factor(0.8, w) >= 1.0);
  }
  CHECK(wqd::thermal_factor(0.8, 0.0) == 0.0);  // excluded node convention
}
