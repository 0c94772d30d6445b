#pragma once

#include <string>
#include <vector>

#include "wqd/analysis.hpp"
#include "wqd/dynamics.hpp"
#include "wqd/influence.hpp"
#include "wqd/scenario.hpp"

namespace wqd {

struct RunOptions {
  std::string out_dir = ".";
  int jobs = 1;
  double rel_tol = 1e-6;  // global quadrature target
  bool strict = false;    // promote non-convergence to an error
};

// One resolved curve set: the influence pair and everything derived from it.
struct SeriesResult {
  std::string label;
  Scenario resolved;
  std::vector<double> time;
  InfluenceSeries inf1, inf2;
  std::vector<double> coherence;  // e^{I1+I2}
  std::vector<ReducedState> states;
  std::vector<double> p_full, p_first;
  bool converged = false;
  bool p_first_diverging = false;
  BackflowReport backflow;
};

struct SweepRow {
  double sigma = 0.0;
  double accel = 0.0;
  double omega = 0.0;
  double lambda_ir = 0.0;
  double p_full = 0.0;
  double p_first = 0.0;
  bool backflow = false;
};

struct PairCrossings {
  std::string label_a, label_b;
  CrossingReport report;
};

struct RunOutput {
  Scenario scenario;
  std::vector<SeriesResult> series;
  std::vector<SweepRow> sweep_rows;
  std::vector<PairCrossings> crossings;
  std::vector<std::string> warnings;
};

// Evaluate one resolved scenario (no variants, no sweep).
SeriesResult run_single(const Scenario& s, const RunOptions& opt = {});

// Evaluate a scenario file's content: all variants plus the sweep, with the
// cross-curve analyses.
RunOutput run_scenario(const Scenario& s, const RunOptions& opt = {});

// CSV series/sweep files, the column manifest and the JSON summary, written
// under opt.out_dir with deterministic formatting.
void write_outputs(const RunOutput& out, const RunOptions& opt);
std::string summary_json(const RunOutput& out);

// Per-cell grid horizon used by the parameter sweeps (gaussian switching
// converges once the window closes): clamp(4 sigma + 1, 2, tau_max).
double sweep_cell_tau_max(double sigma, double scenario_tau_max);

}  // namespace wqd
