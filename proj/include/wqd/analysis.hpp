#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace wqd {

// One simple crossing of two decoherence curves.
struct Crossing {
  double tau_star = 0.0;
  int lower_before = 0;  // 0: series A more negative before tau_star, 1: B
};

struct CrossingReport {
  std::vector<Crossing> crossings;
  // largest |A - B| after the first crossing, and the overall |value| scale
  double reversal_amplitude = 0.0;
  double value_scale = 0.0;
  // the separation that gets reversed: largest |A - B| before the first
  // crossing and the |value| scale over that window, for judging how
  // pronounced the overtaking is
  double pre_crossing_gap = 0.0;
  double pre_crossing_scale = 0.0;
};

// Zero crossings of I_A - I_B on a shared grid, with linear interpolation
// for tau*. Throws DomainError on mismatched grids.
CrossingReport detect_overtaking(std::span<const double> tau,
                                 std::span<const double> series_a,
                                 std::span<const double> series_b);

struct BackflowInterval {
  double tau_begin = 0.0;
  double tau_end = 0.0;
  double rise = 0.0;
};

struct BackflowReport {
  std::vector<BackflowInterval> intervals;
  double max_rebound = 0.0;
};

// Maximal intervals where the coherence e^I strictly increases by at least
// `threshold`: the qualitative signature of information backflow.
BackflowReport detect_backflow(std::span<const double> tau,
                               std::span<const double> exp_influence,
                               double threshold = 1e-4);

// Cell-by-cell backflow presence over a (sigma, a) parameter grid. The
// evaluator returns the coherence series e^{I1+I2} for one cell.
using CoherenceEvaluator = std::function<std::vector<double>(
    double sigma, double accel, std::vector<double>& tau_out)>;
std::vector<std::vector<bool>> backflow_region_scan(
    std::span<const double> sigma_grid, std::span<const double> accel_grid,
    const CoherenceEvaluator& eval, double threshold = 1e-4);

enum class SlopeClass { Decreasing, Increasing, Crossover, Flat };
const char* slope_class_name(SlopeClass c);

struct TransitionCurve {
  std::vector<double> accel;
  std::vector<double> p_full;
  std::vector<double> p_first;
  SlopeClass class_full = SlopeClass::Flat;
  SlopeClass class_first = SlopeClass::Flat;
  std::vector<double> crossover_locations;  // sign changes of the filtered slope
};

// P(a) scan classifier. The evaluator returns (P_full, P_first) for one
// acceleration. Slopes are median-of-3 filtered before sign classification
// so quadrature noise does not flip cells.
using TransitionEvaluator =
    std::function<std::pair<double, double>(double accel)>;
TransitionCurve anti_unruh_scan(std::span<const double> accel_grid,
                                const TransitionEvaluator& eval,
                                double flat_tol = 1e-12);

}  // namespace wqd
