#include "wqd/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <thread>

#include "json.hpp"
#include "wqd/errors.hpp"
#include "wqd/frames.hpp"
#include "wqd/kernels.hpp"

namespace wqd {

namespace {

MotionProfile make_profile(const WorldlineSpec& w) {
  if (w.profile == "constant") return MotionProfile::constant(w.value);
  if (w.profile == "rectangular") {
    return MotionProfile::rectangular(w.amplitude, w.tau1, w.tau2);
  }
  return MotionProfile::cosine(w.value, w.omega_g);
}

Worldline make_worldline(const WorldlineSpec& w, int dim, double table_hint) {
  if (w.family == "static") return Worldline::make_static(dim);
  if (w.family == "const-velocity") return Worldline::make_const_velocity(w.velocity);
  if (w.family == "const-accel") {
    return w.accel == 0.0 ? Worldline::make_static(dim)
                          : Worldline::make_const_accel(w.accel);
  }
  if (w.family == "generic-linear") {
    return Worldline::make_generic_linear(make_profile(w), table_hint);
  }
  return Worldline::make_circular(w.radius, make_profile(w), w.phase, table_hint);
}

Switching make_switching(const SwitchingSpec& s) {
  if (s.kind == "unity") return Switching::unity();
  if (s.kind == "gaussian") return Switching::gaussian(s.sigma);
  return Switching::cosine(s.omega_m);
}

SpectralDensity make_spectrum(const SpectrumSpec& s) {
  SpectralDensity d;
  if (s.kind == "uniform") d.kind = SpectrumKind::Uniform;
  if (s.kind == "ohmic") d.kind = SpectrumKind::Ohmic;
  if (s.kind == "sub-ohmic") d.kind = SpectrumKind::SubOhmic;
  if (s.kind == "super-ohmic") d.kind = SpectrumKind::SuperOhmic;
  d.coupling = s.coupling;
  d.lambda_ir = s.lambda_ir;
  d.lambda_uv = s.lambda_uv;
  return d;
}

TimeMap make_time_map(const Scenario& s) {
  const double a = s.mode1.worldline.accel;
  TimeMap map;
  if (s.mode2.time_map.kind == "linear-separation") {
    const double l = s.mode2.time_map.separation;
    map.tau2 = [a, l](double t) { return tau2_separation(a, l, t); };
    map.dtau2 = [a, l](double t) { return dtau2_separation(a, l, t); };
  } else {
    const double a2 = s.mode2.worldline.accel;
    map.tau2 = [a, a2](double t) { return tau2_two_accels(a, a2, t); };
    map.dtau2 = [a, a2](double t) { return dtau2_two_accels(a, a2, t); };
    map.tau2_bound = causal_domain_bound(a, a2);
  }
  return map;
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const int workers = static_cast<int>(std::min<std::size_t>(jobs, n));
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < n; i += workers) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v + 0.0);  // normalizes -0
  return buf;
}

}  // namespace

double sweep_cell_tau_max(double sigma, double scenario_tau_max) {
  return std::min(scenario_tau_max, std::max(2.0, 4.0 * sigma + 1.0));
}

SeriesResult run_single(const Scenario& s, const RunOptions& opt) {
  SeriesResult r;
  r.resolved = s;
  r.label = s.name;

  std::vector<double> breakpoints;
  for (double b : make_profile(s.mode1.worldline).breakpoints()) {
    breakpoints.push_back(b);
  }
  const bool mapped = s.mode2.time_map.kind != "none";
  if (!mapped) {
    for (double b : make_profile(s.mode2.worldline).breakpoints()) {
      breakpoints.push_back(b);
    }
  }
  const bool has_breakpoints =
      (s.mode1.worldline.profile == "rectangular" &&
       s.mode1.worldline.family != "static") ||
      (!mapped && s.mode2.worldline.profile == "rectangular");
  const TimeGrid grid =
      has_breakpoints
          ? TimeGrid::uniform(s.tau_max, s.step, breakpoints)
          : TimeGrid::uniform(s.tau_max, s.step);

  const Switching sw1 = make_switching(s.mode1.switching);
  const Switching sw2 = make_switching(s.mode2.switching);
  const SpectralDensity sp1 = make_spectrum(s.mode1.spectrum);
  const SpectralDensity sp2 = make_spectrum(s.mode2.spectrum);

  if (s.frame == "thermal") {
    double temp = s.temperature;
    if (temp < 0.0) {
      temp = std::abs(s.mode1.worldline.accel) / (2.0 * M_PI);
    }
    r.inf1 = influence_thermal(sp1, temp, grid, opt.rel_tol * 1e-3);
    r.inf2 = (s.mode1 == s.mode2)
                 ? r.inf1
                 : influence_thermal(sp2, temp, grid, opt.rel_tol * 1e-3);
  } else if (s.frame == "E") {
    const Worldline w1 = make_worldline(s.mode1.worldline, s.dimension, s.tau_max * 1.1);
    r.inf1 = influence_e_frame(w1, sw1, sp1, grid, s.dimension);
    if (s.mode1 == s.mode2) {
      r.inf2 = r.inf1;
    } else {
      const Worldline w2 = make_worldline(s.mode2.worldline, s.dimension, s.tau_max * 1.1);
      r.inf2 = influence_e_frame(w2, sw2, sp2, grid, s.dimension);
    }
  } else {
    const Worldline w1 = make_worldline(s.mode1.worldline, s.dimension, s.tau_max * 1.1);
    r.inf1 = influence_m_frame(w1, sw1, sp1, grid, s.dimension);
    if (mapped) {
      const TimeMap map = make_time_map(s);
      const double span = map.tau2(std::min(s.tau_max, 700.0 / std::max(1.0, std::abs(s.mode1.worldline.accel))));
      const Worldline w2 =
          make_worldline(s.mode2.worldline, s.dimension, std::max(span + 1.0, s.tau_max));
      r.inf2 = influence_m_frame(w2, sw2, sp2, grid, s.dimension, &map);
    } else if (s.mode1 == s.mode2) {
      r.inf2 = r.inf1;
    } else {
      const Worldline w2 = make_worldline(s.mode2.worldline, s.dimension, s.tau_max * 1.1);
      r.inf2 = influence_m_frame(w2, sw2, sp2, grid, s.dimension);
    }
  }

  const std::size_t n = std::min(r.inf1.time.size(), r.inf2.time.size());
  r.time.assign(r.inf1.time.begin(), r.inf1.time.begin() + n);
  const ReducedState rho0{s.rho00, {s.re_rho01, s.im_rho01}};
  for (std::size_t k = 0; k < n; ++k) {
    const double i1 = r.inf1.values[k];
    const double i2 = r.inf2.values[k];
    r.coherence.push_back(std::exp(i1 + i2));
    r.states.push_back(evolve(rho0, i1, i2));
    r.p_full.push_back(transition_prob_full(i1, i2));
    r.p_first.push_back(transition_prob_first(i1, i2));
  }
  r.converged = series_converged(r.coherence);
  const bool finite_duration = s.mode1.switching.kind == "gaussian" ||
                               s.mode2.switching.kind == "gaussian";
  r.p_first_diverging = !finite_duration && !series_converged(r.p_first);
  r.backflow = detect_backflow(r.time, r.coherence, s.backflow_threshold);
  return r;
}

namespace {

RunOutput run_sweep(const Scenario& s, const RunOptions& opt) {
  RunOutput out;
  out.scenario = s;

  std::vector<double> sigmas = s.sweep.sigma;
  if (sigmas.empty()) sigmas = {s.mode1.switching.sigma};
  std::vector<double> irs = s.sweep.lambda_ir;
  if (irs.empty()) irs = {s.mode1.spectrum.lambda_ir};
  const bool vs_omega = s.sweep.kind == "transition-vs-omega";
  const std::vector<double>& xs = vs_omega ? s.sweep.omega : s.sweep.accel;

  struct Cell {
    double sigma, ir, x;
  };
  std::vector<Cell> cells;
  for (double sg : sigmas) {
    for (double ir : irs) {
      for (double x : xs) cells.push_back({sg, ir, x});
    }
  }

  std::vector<SweepRow> rows(cells.size());
  parallel_for(cells.size(), opt.jobs, [&](std::size_t i) {
    const Cell& c = cells[i];
    Scenario cell = s;
    cell.sweep = SweepSpec{};
    cell.variants.clear();
    cell.mode1.switching.kind = "gaussian";
    cell.mode1.switching.sigma = c.sigma;
    cell.mode1.spectrum.lambda_ir = c.ir;
    if (vs_omega) {
      cell.mode1.worldline.family = "circular";
      cell.mode1.worldline.profile = "constant";
      cell.mode1.worldline.value = c.x;
    } else {
      cell.mode1.worldline.family = "const-accel";
      cell.mode1.worldline.accel = c.x;
    }
    cell.mode2 = cell.mode1;
    cell.tau_max = sweep_cell_tau_max(c.sigma, s.tau_max);
    const SeriesResult r = run_single(cell, opt);
    SweepRow row;
    row.sigma = c.sigma;
    row.lambda_ir = c.ir;
    (vs_omega ? row.omega : row.accel) = c.x;
    row.p_full = r.p_full.back();
    row.p_first = r.p_first.back();
    row.backflow = !r.backflow.intervals.empty();
    rows[i] = row;
  });
  out.sweep_rows = std::move(rows);
  return out;
}

}  // namespace

RunOutput run_scenario(const Scenario& s, const RunOptions& opt) {
  if (s.sweep.kind != "none") {
    return run_sweep(s, opt);
  }
  RunOutput out;
  out.scenario = s;
  std::vector<Scenario> resolved;
  std::vector<std::string> labels;
  if (s.variants.empty()) {
    resolved.push_back(s);
    labels.push_back("");
  } else {
    for (const auto& v : s.variants) {
      resolved.push_back(apply_variant(s, v));
      labels.push_back(v.label);
    }
  }
  out.series.resize(resolved.size());
  parallel_for(resolved.size(), opt.jobs, [&](std::size_t i) {
    out.series[i] = run_single(resolved[i], opt);
    out.series[i].label = labels[i];
  });

  for (const auto& r : out.series) {
    if (!r.converged && r.resolved.mode1.switching.kind != "cosine") {
      out.warnings.push_back("series '" + r.label + "' did not converge on the grid");
    }
    if (r.inf1.truncated_causal || r.inf2.truncated_causal) {
      out.warnings.push_back("series '" + r.label + "' truncated at the causal bound");
    }
  }

  // pairwise crossing reports for multi-curve runs on a shared grid
  for (std::size_t i = 0; i < out.series.size(); ++i) {
    for (std::size_t j = i + 1; j < out.series.size(); ++j) {
      const auto& a = out.series[i];
      const auto& b = out.series[j];
      if (a.time.size() != b.time.size()) continue;
      std::vector<double> ia(a.time.size()), ib(b.time.size());
      for (std::size_t k = 0; k < a.time.size(); ++k) {
        ia[k] = a.inf1.values[k] + a.inf2.values[k];
        ib[k] = b.inf1.values[k] + b.inf2.values[k];
      }
      PairCrossings pc;
      pc.label_a = a.label;
      pc.label_b = b.label;
      pc.report = detect_overtaking(a.time, ia, ib);
      out.crossings.push_back(std::move(pc));
    }
  }
  return out;
}

namespace {

void write_series_csv(const SeriesResult& r, const std::string& path) {
  std::ofstream os(path);
  os << "time,influence1,influence2,coherence,re_rho01,im_rho01,rho00,"
        "p_full,p_first,flags\n";
  int flags = 0;
  if (r.inf1.truncated_causal || r.inf2.truncated_causal) flags |= 1;
  if (!r.converged) flags |= 2;
  if (r.p_first_diverging) flags |= 4;
  for (std::size_t k = 0; k < r.time.size(); ++k) {
    os << fmt(r.time[k]) << ',' << fmt(r.inf1.values[k]) << ','
       << fmt(r.inf2.values[k]) << ',' << fmt(r.coherence[k]) << ','
       << fmt(r.states[k].rho01.real()) << ',' << fmt(r.states[k].rho01.imag())
       << ',' << fmt(r.states[k].rho00) << ',' << fmt(r.p_full[k]) << ','
       << fmt(r.p_first[k]) << ',' << flags << "\n";
  }
}

void write_sweep_csv(const RunOutput& out, const std::string& path) {
  std::ofstream os(path);
  const bool vs_omega = out.scenario.sweep.kind == "transition-vs-omega";
  const bool grid = out.scenario.sweep.kind == "backflow-grid";
  if (grid) {
    os << "sigma,accel,backflow\n";
    for (const auto& r : out.sweep_rows) {
      os << fmt(r.sigma) << ',' << fmt(r.accel) << ',' << (r.backflow ? 1 : 0)
         << "\n";
    }
    return;
  }
  os << "sigma,lambda_ir," << (vs_omega ? "omega" : "accel")
     << ",p_full,p_first\n";
  for (const auto& r : out.sweep_rows) {
    os << fmt(r.sigma) << ',' << fmt(r.lambda_ir) << ','
       << fmt(vs_omega ? r.omega : r.accel) << ',' << fmt(r.p_full) << ','
       << fmt(r.p_first) << "\n";
  }
}

constexpr const char* kColumnsManifest =
    "series CSV columns (natural units, c = 1):\n"
    "  time        observer time at the grid node (proper or coordinate)\n"
    "  influence1  influence functional of mode 1 (<= 0)\n"
    "  influence2  influence functional of mode 2 (<= 0)\n"
    "  coherence   exp(influence1 + influence2)\n"
    "  re_rho01    Re of the off-diagonal reduced-matrix element\n"
    "  im_rho01    Im of the off-diagonal reduced-matrix element\n"
    "  rho00       excited-state population\n"
    "  p_full      full transition probability, 1/2 (1 - coherence)\n"
    "  p_first     first-order transition probability\n"
    "  flags       bit 0: causal truncation, bit 1: not converged,\n"
    "              bit 2: first-order probability diverging\n"
    "\n"
    "sweep CSV columns:\n"
    "  sigma, lambda_ir and accel (or omega) identify the cell;\n"
    "  p_full/p_first are read at the end of the cell grid;\n"
    "  backflow-grid emits sigma, accel and a 0/1 backflow marker.\n";

}  // namespace

std::string summary_json(const RunOutput& out) {
  nlohmann::json j;
  j["name"] = out.scenario.name;
  j["frame"] = out.scenario.frame;
  j["dimension"] = out.scenario.dimension;
  j["kernel_isa"] = kernels::isa_name(kernels::active_isa());
  j["warnings"] = out.warnings;
  j["series"] = nlohmann::json::array();
  for (const auto& r : out.series) {
    nlohmann::json js;
    js["label"] = r.label;
    js["converged"] = r.converged;
    js["p_first_diverging"] = r.p_first_diverging;
    js["truncated_causal"] = r.inf1.truncated_causal || r.inf2.truncated_causal;
    if (r.inf2.truncated_causal) {
      js["causal_bound_time"] = r.inf2.causal_bound_time;
    }
    js["error_estimate"] = std::max(r.inf1.error_estimate, r.inf2.error_estimate);
    if (!r.time.empty()) {
      js["final"] = {{"time", r.time.back()},
                     {"influence1", r.inf1.values[r.time.size() - 1]},
                     {"influence2", r.inf2.values[r.time.size() - 1]},
                     {"coherence", r.coherence.back()},
                     {"p_full", r.p_full.back()},
                     {"p_first", r.p_first.back()}};
    }
    nlohmann::json jb = nlohmann::json::array();
    for (const auto& iv : r.backflow.intervals) {
      jb.push_back({{"begin", iv.tau_begin}, {"end", iv.tau_end}, {"rise", iv.rise}});
    }
    js["backflow_intervals"] = jb;
    js["max_rebound"] = r.backflow.max_rebound;
    j["series"].push_back(js);
  }
  j["crossings"] = nlohmann::json::array();
  for (const auto& pc : out.crossings) {
    nlohmann::json jc;
    jc["a"] = pc.label_a;
    jc["b"] = pc.label_b;
    nlohmann::json stars = nlohmann::json::array();
    for (const auto& c : pc.report.crossings) {
      stars.push_back({{"tau", c.tau_star}, {"lower_before", c.lower_before}});
    }
    jc["crossings"] = stars;
    jc["reversal_amplitude"] = pc.report.reversal_amplitude;
    jc["value_scale"] = pc.report.value_scale;
    j["crossings"].push_back(jc);
  }
  if (!out.sweep_rows.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : out.sweep_rows) {
      rows.push_back({{"sigma", r.sigma},
                      {"lambda_ir", r.lambda_ir},
                      {"accel", r.accel},
                      {"omega", r.omega},
                      {"p_full", r.p_full},
                      {"p_first", r.p_first},
                      {"backflow", r.backflow}});
    }
    j["sweep"] = {{"kind", out.scenario.sweep.kind}, {"rows", rows}};
  }
  return j.dump(2);
}

void write_outputs(const RunOutput& out, const RunOptions& opt) {
  namespace fs = std::filesystem;
  fs::create_directories(opt.out_dir);
  const std::string base = opt.out_dir + "/" + out.scenario.name;
  for (const auto& r : out.series) {
    const std::string path =
        r.label.empty() ? base + ".csv" : base + "__" + r.label + ".csv";
    write_series_csv(r, path);
  }
  if (!out.sweep_rows.empty()) {
    write_sweep_csv(out, base + "__sweep.csv");
  }
  std::ofstream manifest(opt.out_dir + "/columns.txt");
  manifest << kColumnsManifest;
  std::ofstream summary(base + "__summary.json");
  summary << summary_json(out) << "\n";
}

}  // namespace wqd
