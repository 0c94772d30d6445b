#include "wqd/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "wqd/errors.hpp"

namespace wqd {

CrossingReport detect_overtaking(std::span<const double> tau,
                                 std::span<const double> series_a,
                                 std::span<const double> series_b) {
  if (tau.size() != series_a.size() || tau.size() != series_b.size()) {
    throw DomainError("detect_overtaking: series must share one grid");
  }
  CrossingReport rep;
  // track the last strictly signed sample so grid points sitting exactly on
  // a zero do not swallow the sign change
  double prev = 0.0;
  std::size_t prev_k = 0;
  std::size_t first_cross = tau.size();
  for (std::size_t k = 0; k < tau.size(); ++k) {
    const double d = series_a[k] - series_b[k];
    rep.value_scale = std::max({rep.value_scale, std::abs(series_a[k]),
                                std::abs(series_b[k])});
    if (d != 0.0) {
      if (prev != 0.0 && std::signbit(d) != std::signbit(prev)) {
        Crossing c;
        c.tau_star = tau[prev_k] + (tau[k] - tau[prev_k]) * prev / (prev - d);
        c.lower_before = prev < 0.0 ? 0 : 1;
        rep.crossings.push_back(c);
        if (first_cross == tau.size()) first_cross = k;
      }
      prev = d;
      prev_k = k;
    }
  }
  for (std::size_t k = first_cross; k < tau.size(); ++k) {
    rep.reversal_amplitude =
        std::max(rep.reversal_amplitude, std::abs(series_a[k] - series_b[k]));
  }
  for (std::size_t k = 0; k < std::min(first_cross, tau.size()); ++k) {
    rep.pre_crossing_gap =
        std::max(rep.pre_crossing_gap, std::abs(series_a[k] - series_b[k]));
    rep.pre_crossing_scale = std::max(
        {rep.pre_crossing_scale, std::abs(series_a[k]), std::abs(series_b[k])});
  }
  return rep;
}

BackflowReport detect_backflow(std::span<const double> tau,
                               std::span<const double> exp_influence,
                               double threshold) {
  if (!(threshold > 0.0)) throw DomainError("detect_backflow: threshold must be > 0");
  BackflowReport rep;
  std::size_t k = 1;
  const std::size_t n = tau.size();
  while (k < n) {
    if (exp_influence[k] > exp_influence[k - 1]) {
      const std::size_t begin = k - 1;
      while (k < n && exp_influence[k] > exp_influence[k - 1]) ++k;
      const double rise = exp_influence[k - 1] - exp_influence[begin];
      if (rise >= threshold) {
        rep.intervals.push_back({tau[begin], tau[k - 1], rise});
        rep.max_rebound = std::max(rep.max_rebound, rise);
      }
    } else {
      ++k;
    }
  }
  return rep;
}

std::vector<std::vector<bool>> backflow_region_scan(
    std::span<const double> sigma_grid, std::span<const double> accel_grid,
    const CoherenceEvaluator& eval, double threshold) {
  std::vector<std::vector<bool>> cells(sigma_grid.size());
  for (std::size_t i = 0; i < sigma_grid.size(); ++i) {
    cells[i].resize(accel_grid.size());
    for (std::size_t j = 0; j < accel_grid.size(); ++j) {
      std::vector<double> tau;
      const std::vector<double> coh = eval(sigma_grid[i], accel_grid[j], tau);
      cells[i][j] = !detect_backflow(tau, coh, threshold).intervals.empty();
    }
  }
  return cells;
}

const char* slope_class_name(SlopeClass c) {
  switch (c) {
    case SlopeClass::Decreasing: return "anti-unruh";
    case SlopeClass::Increasing: return "unruh";
    case SlopeClass::Crossover: return "crossover";
    case SlopeClass::Flat: return "flat";
  }
  return "?";
}

namespace {

SlopeClass classify(const std::vector<double>& a, const std::vector<double>& p,
                    double flat_tol, std::vector<double>* locations) {
  // raw slopes, then a 3-point median filter against quadrature noise
  std::vector<double> slope;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    slope.push_back((p[k + 1] - p[k]) / (a[k + 1] - a[k]));
  }
  std::vector<double> filt(slope);
  for (std::size_t k = 1; k + 1 < slope.size(); ++k) {
    double v[3] = {slope[k - 1], slope[k], slope[k + 1]};
    std::sort(v, v + 3);
    filt[k] = v[1];
  }
  int pos = 0, neg = 0;
  double prev = 0.0;
  for (std::size_t k = 0; k < filt.size(); ++k) {
    const double s = std::abs(filt[k]) <= flat_tol ? 0.0 : filt[k];
    if (s > 0.0) ++pos;
    if (s < 0.0) ++neg;
    if (locations && k > 0 && s * prev < 0.0) {
      locations->push_back(0.5 * (a[k] + a[k + 1]));
    }
    if (s != 0.0) prev = s;
  }
  if (pos > 0 && neg > 0) return SlopeClass::Crossover;
  if (neg > 0) return SlopeClass::Decreasing;
  if (pos > 0) return SlopeClass::Increasing;
  return SlopeClass::Flat;
}

}  // namespace

TransitionCurve anti_unruh_scan(std::span<const double> accel_grid,
                                const TransitionEvaluator& eval,
                                double flat_tol) {
  TransitionCurve c;
  c.accel.assign(accel_grid.begin(), accel_grid.end());
  for (double a : accel_grid) {
    const auto [pf, p1] = eval(a);
    c.p_full.push_back(pf);
    c.p_first.push_back(p1);
  }
  c.class_full = classify(c.accel, c.p_full, flat_tol, &c.crossover_locations);
  c.class_first = classify(c.accel, c.p_first, flat_tol, nullptr);
  return c;
}

}  // namespace wqd
