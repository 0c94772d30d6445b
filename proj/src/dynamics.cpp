#include "wqd/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "wqd/errors.hpp"

namespace wqd {

bool ReducedState::positive_semidefinite(double tol) const {
  const double d = rho00 - 0.5;
  return d * d + std::norm(rho01) <= 0.25 + tol;
}

ReducedState evolve(const ReducedState& initial, double influence1,
                    double influence2) {
  if (influence1 > 1e-12 || influence2 > 1e-12) {
    throw DomainError("evolve: influence functionals must be <= 0");
  }
  ReducedState out;
  out.rho00 = 0.5 + (initial.rho00 - 0.5) * std::exp(influence1 + influence2);
  out.rho01 = {std::exp(influence2) * initial.rho01.real(),
               std::exp(influence1) * initial.rho01.imag()};
  return out;
}

double transition_prob_full(double influence1, double influence2) {
  return 0.5 * (1.0 - std::exp(influence1 + influence2));
}

double transition_prob_first(double influence1, double influence2) {
  return -0.5 * (influence1 + influence2);
}

RateReport transition_rate(std::span<const double> time,
                           std::span<const double> influence_sum,
                           std::span<const double> windows) {
  RateReport r;
  for (double w : windows) {
    // last grid point <= w
    std::size_t k = 0;
    while (k + 1 < time.size() && time[k + 1] <= w) ++k;
    r.windows.push_back(time[k]);
    r.rates.push_back(time[k] > 0.0 ? -0.5 * influence_sum[k] / time[k] : 0.0);
  }
  const std::size_t n = r.rates.size();
  if (n >= 2) {
    // rate(T) ~ r_inf + c/T; eliminate the 1/T term from the last pair
    const double t1 = r.windows[n - 2], t2 = r.windows[n - 1];
    const double r1 = r.rates[n - 2], r2 = r.rates[n - 1];
    r.extrapolated = (t2 * r2 - t1 * r1) / (t2 - t1);
    const double scale = std::max({std::abs(r1), std::abs(r2), 1e-300});
    r.plateau = std::abs(r2 - r1) <= 0.1 * scale;
  } else if (n == 1) {
    r.extrapolated = r.rates[0];
  }
  return r;
}

bool series_converged(std::span<const double> values, double tol) {
  if (values.size() < 2) return false;
  const std::size_t tail = std::max<std::size_t>(2, values.size() / 10);
  const auto last = values.end();
  const double ref = values.back();
  double lo = ref, hi = ref;
  for (auto it = last - tail; it != last; ++it) {
    lo = std::min(lo, *it);
    hi = std::max(hi, *it);
  }
  return (hi - lo) <= tol * (std::abs(ref) + 1.0);
}

}  // namespace wqd
