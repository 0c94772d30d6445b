#include "wqd/influence.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "wqd/bessel.hpp"
#include "wqd/errors.hpp"
#include "wqd/expint.hpp"
#include "wqd/kernels.hpp"

namespace wqd {

namespace {

// 4-point Gauss-Legendre on [-1, 1]
constexpr double kGl4X[4] = {-0.86113631159405257522, -0.33998104358485626480,
                             0.33998104358485626480, 0.86113631159405257522};
constexpr double kGl4W[4] = {0.34785484513745385737, 0.65214515486254614263,
                             0.65214515486254614263, 0.34785484513745385737};

constexpr double kAmplitudeFloor = 1e-4;  // content threshold for u_res

struct SampledMode {
  // proper time of the mode and Jacobian d tau_mode / d s at observer time s
  double tau;
  double jac;
};

SampledMode sample_map(const TimeMap* map, double s) {
  if (!map) return {s, 1.0};
  return {map->tau2(s), map->dtau2(s)};
}

InfluenceSeries finalize(InfluenceSeries series) {
  series.exp_values.resize(series.values.size());
  for (std::size_t k = 0; k < series.values.size(); ++k) {
    // clamp the rounding fuzz at the start of the grid
    if (series.values[k] > 0.0 && series.values[k] < 1e-12) {
      series.values[k] = 0.0;
    }
    series.exp_values[k] = std::exp(series.values[k]);
  }
  return series;
}

// ---------------------------------------------------------------------------
// d = 1: light-cone factorization

// Rebase each branch's phase coordinate wherever the trailing window of
// one kernel support contains negligible content: cross-terms across such a
// point integrate to zero against the spectrum, and the rebasing keeps the
// frequency grid from having to resolve ripples at the exponentially grown
// absolute phase. Cells record where the running transform is banked into
// the carry and restarted.
void apply_clustering(kernels::D1Tables& t, double gap) {
  if (!std::isfinite(gap)) return;
  const int n = t.n_cells;
  t.reset_m.assign(n, 0);
  t.reset_p.assign(n, 0);
  bool any = false;

  // integrated content weight per cell and its prefix sum
  std::vector<double> prefix(n + 1, 0.0);
  for (int c = 0; c < n; ++c) {
    double cw = 0.0;
    for (int j = 0; j < kernels::kNodesPerCell; ++j) {
      cw += std::abs(t.node_w[c * kernels::kNodesPerCell + j]);
    }
    prefix[c + 1] = prefix[c] + cw;
  }
  const double negligible = 1e-4 * prefix[n];

  for (int br = 0; br < 2; ++br) {
    std::vector<double>& ul = br ? t.up_l : t.um_l;
    std::vector<double>& ur = br ? t.up_r : t.um_r;
    std::vector<double>& nu = br ? t.node_up : t.node_um;
    std::vector<unsigned char>& reset = br ? t.reset_p : t.reset_m;

    // pass 1 on the absolute coordinates: find valid reset points
    int window_begin = 0;  // first cell whose content may reach into ul[c]
    for (int c = 0; c < n; ++c) {
      while (window_begin < c && ur[window_begin] <= ul[c] - gap) {
        ++window_begin;
      }
      const double window_content = prefix[c] - prefix[window_begin];
      if (c > 0 && window_content <= negligible) {
        reset[c] = 1;
        any = true;
      }
    }
    // pass 2: rebase each cluster to its own origin
    double base = 0.0;
    for (int c = 0; c < n; ++c) {
      if (reset[c]) base = ul[c];
      ul[c] -= base;
      ur[c] -= base;
      for (int j = 0; j < kernels::kNodesPerCell; ++j) {
        nu[c * kernels::kNodesPerCell + j] -= base;
      }
    }
  }
  if (!any) {
    t.reset_m.clear();
    t.reset_p.clear();
  }
}

// Deaden branch cells whose rebased phase coordinate exceeds the budget the
// trig reduction can represent: at such coordinates the content density has
// decayed like 1/(a u) and the oscillation phase is dominated by the
// rounding of u itself, so the exact contribution is bounded by the IBP
// amplitude already -- zeroing it keeps the bound and keeps the arithmetic
// finite.
void apply_phase_budget(kernels::D1Tables& t, double omega_max) {
  constexpr double kPhaseBudget = 3e6;
  const double u_cap = kPhaseBudget / std::max(omega_max, 1.0);
  for (int br = 0; br < 2; ++br) {
    std::vector<double>& ul = br ? t.up_l : t.um_l;
    std::vector<double>& ur = br ? t.up_r : t.um_r;
    std::vector<double>& nu = br ? t.node_up : t.node_um;
    std::vector<double>& al = br ? t.ap_l : t.am_l;
    std::vector<double>& ar = br ? t.ap_r : t.am_r;
    std::vector<double>& cut = br ? t.cut_p : t.cut_m;
    for (int c = 0; c < t.n_cells; ++c) {
      // the cell's reach decides: a single cell can span a whole burst
      if (ur[c] > u_cap) {
        cut[c] = -1.0;
        al[c] = ar[c] = 0.0;
        ul[c] = ur[c] = 0.0;
        for (int j = 0; j < kernels::kNodesPerCell; ++j) {
          nu[c * kernels::kNodesPerCell + j] = 0.0;
        }
      }
    }
  }
}

kernels::D1Tables build_d1_tables(const Worldline& w, const Switching& sw,
                                  const std::vector<double>& nodes,
                                  const TimeMap* map,
                                  double* compression = nullptr) {
  const int n_cells = static_cast<int>(nodes.size()) - 1;
  kernels::D1Tables t;
  t.n_cells = n_cells;
  t.node_w.resize(n_cells * kernels::kNodesPerCell);
  t.node_um.resize(n_cells * kernels::kNodesPerCell);
  t.node_up.resize(n_cells * kernels::kNodesPerCell);
  t.am_l.resize(n_cells);
  t.am_r.resize(n_cells);
  t.ap_l.resize(n_cells);
  t.ap_r.resize(n_cells);
  t.um_l.resize(n_cells);
  t.um_r.resize(n_cells);
  t.up_l.resize(n_cells);
  t.up_r.resize(n_cells);
  t.cut_m.resize(n_cells);
  t.cut_p.resize(n_cells);

  std::vector<double> cell_min_du(n_cells, 1.0);
  std::vector<double> cell_amp(n_cells, 0.0);
  for (int c = 0; c < n_cells; ++c) {
    const double sl = nodes[c], sr = nodes[c + 1];
    const double half = 0.5 * (sr - sl);
    const double mid = 0.5 * (sr + sl);
    for (int n = 0; n < kernels::kNodesPerCell; ++n) {
      const double s = mid + half * kGl4X[n];
      const SampledMode m = sample_map(map, s);
      const int idx = c * kernels::kNodesPerCell + n;
      t.node_w[idx] = sw(m.tau) * m.jac * half * kGl4W[n];
      t.node_um[idx] = w.lightcone(m.tau, 0);
      t.node_up[idx] = w.lightcone(m.tau, 1);
      cell_amp[c] = std::max(cell_amp[c], std::abs(t.node_w[idx]));
    }
    const SampledMode ml = sample_map(map, sl);
    const SampledMode mr = sample_map(map, sr);
    const double gl = sw(ml.tau) * ml.jac;
    const double gr = sw(mr.tau) * mr.jac;
    t.um_l[c] = w.lightcone(ml.tau, 0);
    t.um_r[c] = w.lightcone(mr.tau, 0);
    t.up_l[c] = w.lightcone(ml.tau, 1);
    t.up_r[c] = w.lightcone(mr.tau, 1);
    const double dml = ml.jac * w.lightcone_rate(ml.tau, 0);
    const double dmr = mr.jac * w.lightcone_rate(mr.tau, 0);
    const double dpl = ml.jac * w.lightcone_rate(ml.tau, 1);
    const double dpr = mr.jac * w.lightcone_rate(mr.tau, 1);
    t.am_l[c] = dml > 0.0 ? gl / dml : 0.0;
    t.am_r[c] = dmr > 0.0 ? gr / dmr : 0.0;
    t.ap_l[c] = dpl > 0.0 ? gl / dpl : 0.0;
    t.ap_r[c] = dpr > 0.0 ? gr / dpr : 0.0;
    for (double du : {dml, dmr, dpl, dpr}) {
      if (du > 0.0) cell_min_du[c] = std::min(cell_min_du[c], du);
    }
    const double span_m = t.um_r[c] - t.um_l[c];
    const double span_p = t.up_r[c] - t.up_l[c];
    t.cut_m[c] = span_m > 0.0 ? kernels::kResolveTheta / span_m
                              : std::numeric_limits<double>::infinity();
    t.cut_p[c] = span_p > 0.0 ? kernels::kResolveTheta / span_p
                              : std::numeric_limits<double>::infinity();
  }
  if (compression) {
    double gmax = 0.0;
    for (double a : cell_amp) gmax = std::max(gmax, a);
    double comp = 1.0;
    for (int c = 0; c < n_cells; ++c) {
      if (cell_amp[c] >= kAmplitudeFloor * gmax) {
        comp = std::max(comp, 1.0 / cell_min_du[c]);
      }
    }
    *compression = std::min(comp, 5.0);
  }
  return t;
}

// Resolved phase horizon: for each frequency, the largest light-cone
// coordinate among cells that (a) still carry weight and (b) the Gauss rule
// resolves at that frequency, returned as a step function of omega built
// from the per-cell cutoffs. Cells whose boundary terms stay strong after
// the per-cell truncation (the prefix endpoints of slowly stretching
// content) lock the horizon at all frequencies: their e^{-i w u} ripples
// survive in the integrand even where the time grid no longer resolves the
// oscillation.
std::function<double(double)> phase_content(const kernels::D1Tables& t) {
  double gmax = 0.0;
  for (double g : t.node_w) gmax = std::max(gmax, std::abs(g));
  double amp_scale = 0.0;
  for (int c = 0; c < t.n_cells; ++c) {
    amp_scale = std::max({amp_scale, std::abs(t.am_l[c]), std::abs(t.am_r[c]),
                          std::abs(t.ap_l[c]), std::abs(t.ap_r[c])});
  }
  double locked = 0.0;
  std::vector<std::pair<double, double>> entries;  // (cutoff, u_right)
  for (int c = 0; c < t.n_cells; ++c) {
    double gcell = 0.0;
    for (int n = 0; n < kernels::kNodesPerCell; ++n) {
      gcell = std::max(gcell, std::abs(t.node_w[c * kernels::kNodesPerCell + n]));
    }
    if (gcell >= kAmplitudeFloor * gmax || c == 0) {
      entries.emplace_back(t.cut_m[c], t.um_r[c]);
      entries.emplace_back(t.cut_p[c], t.up_r[c]);
    }
    if (std::max(std::abs(t.am_l[c]), std::abs(t.am_r[c])) >= 0.02 * amp_scale) {
      locked = std::max(locked, t.um_r[c]);
    }
    if (std::max(std::abs(t.ap_l[c]), std::abs(t.ap_r[c])) >= 0.02 * amp_scale) {
      locked = std::max(locked, t.up_r[c]);
    }
  }
  // sort by cutoff descending; prefix max of u gives U(omega) by bisection
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  auto cuts = std::make_shared<std::vector<double>>();
  auto umax = std::make_shared<std::vector<double>>();
  double run = 0.0;
  for (const auto& [cut, u] : entries) {
    run = std::max(run, u);
    cuts->push_back(cut);
    umax->push_back(run);
  }
  return [cuts, umax, locked](double om) -> double {
    // last entry with cutoff >= om (cuts descending)
    std::size_t lo = 0, hi = cuts->size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if ((*cuts)[mid] >= om) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return std::max(locked, lo == 0 ? 0.0 : (*umax)[lo - 1]);
  };
}

std::vector<double> run_d1(const kernels::D1Tables& t, const OmegaGrid& og,
                           std::size_t n_nodes) {
  std::vector<double> acc(n_nodes, 0.0);
  kernels::d1_accumulate(t, og.nodes, og.weights, acc);
  for (double& v : acc) v *= -4.0;
  return acc;
}

// ---------------------------------------------------------------------------
// d = 2: circular motion

bool uniform_nodes(const std::vector<double>& nodes, double h) {
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (std::abs(nodes[k] - k * h) > 1e-9) return false;
  }
  return true;
}

bool stationary_circular(const Worldline& w, const TimeMap* map) {
  return w.family() == Worldline::Family::Circular &&
         w.profile().kind == ProfileKind::Constant && map == nullptr;
}

// Lag kernel of the stationary case, tabulated at the exact node lags. The
// pair separation comes from the actual worldline positions, so a phase
// offset flows through even though it cancels in the difference. Each lag's
// frequency integral runs on fixed Gauss panels sized to its oscillation.
std::vector<double> stationary_lag_kernel(const Worldline& w,
                                          const SpectralDensity& spec,
                                          const std::vector<double>& nodes) {
  const double gam = w.gamma_factor(0.0);
  std::vector<double> kv(nodes.size());
  const double lo = spec.ir_edge();
  const double hi = spec.omega_max();
  const Worldline::Point p0 = w.position(nodes[0]);
  double gl_nodes[7], gl_weights[7];
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double lag = nodes[j] - nodes[0];
    const double dt = gam * lag;
    const Worldline::Point pj = w.position(nodes[j]);
    const double rho = std::hypot(pj.x - p0.x, pj.y - p0.y);
    const double phase_scale = std::max(dt + rho, 1e-6);
    double acc = 0.0;
    double edge = lo;
    while (edge < hi) {
      // geometric growth from the origin, capped by the oscillation scale
      const double width = std::min(0.9 * M_PI / phase_scale,
                                    0.3 * std::max(edge, hi / 2000.0));
      const double next = std::min(edge + width, hi);
      gauss_legendre7(edge, next, gl_nodes, gl_weights);
      for (int i = 0; i < 7; ++i) {
        const double om = gl_nodes[i];
        acc += gl_weights[i] * om * spec(om) * std::cos(om * dt) *
               bessel_j0(om * rho);
      }
      edge = next;
    }
    kv[j] = 4.0 * M_PI * acc;
  }
  return kv;
}

std::vector<double> run_d2_stationary(const Worldline& w, const Switching& sw,
                                      const SpectralDensity& spec,
                                      const TimeGrid& grid) {
  const std::vector<double> kv = stationary_lag_kernel(w, spec, grid.nodes);
  const double h = grid.step;
  const auto kernel = [&](double t1, double t2) -> std::complex<double> {
    const std::size_t lag =
        static_cast<std::size_t>(std::llround(std::abs(t1 - t2) / h));
    return sw(t1) * sw(t2) * kv[lag];
  };
  std::vector<double> out = cumulative_double_time(kernel, grid);
  for (double& v : out) v *= -2.0;
  return out;
}

kernels::D2Tables build_d2_tables(const Worldline& w, const Switching& sw,
                                  const std::vector<double>& nodes,
                                  const TimeMap* map) {
  const int n_cells = static_cast<int>(nodes.size()) - 1;
  const bool circular = w.family() == Worldline::Family::Circular;
  kernels::D2Tables t;
  t.n_cells = n_cells;
  t.r0 = circular ? w.radius() : 0.0;
  t.node_w.resize(n_cells * kernels::kNodesPerCell);
  t.node_t.resize(n_cells * kernels::kNodesPerCell);
  t.node_cth.resize(n_cells * kernels::kNodesPerCell);
  t.node_sth.resize(n_cells * kernels::kNodesPerCell);
  for (int c = 0; c < n_cells; ++c) {
    const double sl = nodes[c], sr = nodes[c + 1];
    const double half = 0.5 * (sr - sl);
    const double mid = 0.5 * (sr + sl);
    for (int n = 0; n < kernels::kNodesPerCell; ++n) {
      const double s = mid + half * kGl4X[n];
      const SampledMode m = sample_map(map, s);
      const int idx = c * kernels::kNodesPerCell + n;
      t.node_w[idx] = sw(m.tau) * m.jac * half * kGl4W[n];
      t.node_t[idx] = w.coord_time(m.tau);
      const double th = circular ? w.angle(m.tau) : 0.0;
      t.node_cth[idx] = std::cos(th);
      t.node_sth[idx] = std::sin(th);
    }
  }
  return t;
}

std::vector<double> run_d2_harmonics(const kernels::D2Tables& t,
                                     const SpectralDensity& spec,
                                     double panel_scale,
                                     std::size_t n_nodes) {
  // frequency weight carries the extra |w| of the d = 2 measure
  double tmax = 0.0;
  double gmax = 0.0;
  for (double g : t.node_w) gmax = std::max(gmax, std::abs(g));
  for (int n = 0; n < t.n_cells * kernels::kNodesPerCell; ++n) {
    if (std::abs(t.node_w[n]) >= kAmplitudeFloor * gmax) {
      tmax = std::max(tmax, t.node_t[n]);
    }
  }
  OmegaGrid og = build_omega_grid(spec, tmax + t.r0, panel_scale);
  for (std::size_t i = 0; i < og.nodes.size(); ++i) {
    og.weights[i] *= og.nodes[i];
  }
  std::vector<double> acc(n_nodes, 0.0);
  kernels::d2_accumulate(t, og.nodes, og.weights, acc);
  for (double& v : acc) v *= -8.0 * M_PI;
  return acc;
}

// grid nodes surviving the causal bound of the time map; flags truncation
std::vector<double> causal_nodes(const TimeGrid& grid, const TimeMap* map,
                                 InfluenceSeries& series) {
  std::vector<double> nodes = grid.nodes;
  if (map && std::isfinite(map->tau2_bound)) {
    std::size_t keep = nodes.size();
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (map->tau2(nodes[k]) >= map->tau2_bound) {
        keep = k;
        break;
      }
    }
    if (keep < nodes.size()) {
      series.truncated_causal = true;
      series.causal_bound_time = nodes[keep];
      nodes.resize(keep);
    }
  }
  return nodes;
}

}  // namespace

const char* frame_name(Frame f) {
  switch (f) {
    case Frame::M: return "M";
    case Frame::E: return "E";
    case Frame::Thermal: return "thermal";
  }
  return "?";
}

OmegaGrid build_omega_grid(const SpectralDensity& spec,
                           const std::function<double(double)>& resolved_u,
                           double panel_scale) {
  const double lo = spec.ir_edge();
  const double hi = spec.omega_max();
  const double e_min = lo > 0.0 ? lo : hi / 2000.0;

  // hard cap on the panel count: structure finer than this comes from
  // content pairs beyond the spectral kernel's support, whose contribution
  // integrates to zero against A(w); aliasing it is benign at this floor
  const double width_floor = (hi - lo) / 4000.0;
  std::vector<double> edges{lo};
  while (edges.back() < hi) {
    const double e = edges.back();
    const double wres =
        panel_scale * 0.9 * M_PI / std::max(resolved_u(std::max(e, e_min)), 1e-6);
    // graded near the origin (fractional-power kinks of the Ohmic family),
    // geometric in the bulk, floored far out so ripple content beyond the
    // spectral kernel's support cannot blow up the panel count
    double w = std::min(wres, 0.3 * std::max(e, 0.01 * e_min));
    if (e > 10.0 * e_min) w = std::max(w, width_floor);
    edges.push_back(std::min(e + w, hi));
  }

  OmegaGrid grid;
  grid.nodes.reserve((edges.size() - 1) * 7);
  grid.weights.reserve((edges.size() - 1) * 7);
  double nodes[7], weights[7];
  for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
    gauss_legendre7(edges[j], edges[j + 1], nodes, weights);
    for (int i = 0; i < 7; ++i) {
      grid.nodes.push_back(nodes[i]);
      grid.weights.push_back(weights[i] * spec(nodes[i]));
    }
  }
  return grid;
}

OmegaGrid build_omega_grid(const SpectralDensity& spec, double u_res,
                           double panel_scale) {
  return build_omega_grid(
      spec, [u_res](double) { return u_res; }, panel_scale);
}

InfluenceSeries influence_m_frame(const Worldline& w, const Switching& sw,
                                  const SpectralDensity& spec,
                                  const TimeGrid& grid, int dim,
                                  const TimeMap* map,
                                  bool with_error_estimate) {
  if (dim != w.spatial_dim() && w.family() != Worldline::Family::Static) {
    throw DomainError("influence_m_frame: dimension does not match worldline");
  }
  InfluenceSeries series;
  series.frame = Frame::M;
  std::vector<double> nodes = causal_nodes(grid, map, series);
  series.time = nodes;
  if (nodes.size() < 2) {
    series.values.assign(nodes.size(), 0.0);
    return finalize(std::move(series));
  }

  if (dim == 1) {
    kernels::D1Tables tables = build_d1_tables(w, sw, nodes, map);
    apply_clustering(tables, spec.kernel_support());
    apply_phase_budget(tables, spec.omega_max());
    const auto u_res = phase_content(tables);
    const OmegaGrid og = build_omega_grid(spec, u_res);
    series.values = run_d1(tables, og, nodes.size());
    if (with_error_estimate) {
      const OmegaGrid coarse = build_omega_grid(spec, u_res, 1.6);
      const std::vector<double> check = run_d1(tables, coarse, nodes.size());
      double rel = 0.0;
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        rel = std::max(rel, std::abs(series.values[k] - check[k]) /
                                (std::abs(series.values[k]) + 1e-9));
      }
      series.error_estimate = rel;
    }
  } else if (stationary_circular(w, map) && uniform_nodes(nodes, grid.step)) {
    series.values = run_d2_stationary(w, sw, spec, grid);
    series.error_estimate = 1e-9;  // per-lag kernel integrals are adaptive
  } else {
    return influence_circular_harmonics(w, sw, spec, grid, map,
                                        with_error_estimate);
  }
  return finalize(std::move(series));
}

InfluenceSeries influence_circular_harmonics(const Worldline& w,
                                             const Switching& sw,
                                             const SpectralDensity& spec,
                                             const TimeGrid& grid,
                                             const TimeMap* map,
                                             bool with_error_estimate) {
  if (w.family() != Worldline::Family::Circular &&
      w.family() != Worldline::Family::Static) {
    throw DomainError("influence: d = 2 supports circular or static motion");
  }
  InfluenceSeries series;
  series.frame = Frame::M;
  std::vector<double> nodes = causal_nodes(grid, map, series);
  series.time = nodes;
  if (nodes.size() < 2) {
    series.values.assign(nodes.size(), 0.0);
    return finalize(std::move(series));
  }
  const kernels::D2Tables tables = build_d2_tables(w, sw, nodes, map);
  series.values = run_d2_harmonics(tables, spec, 1.0, nodes.size());
  if (with_error_estimate) {
    const std::vector<double> check =
        run_d2_harmonics(tables, spec, 1.6, nodes.size());
    double rel = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      rel = std::max(rel, std::abs(series.values[k] - check[k]) /
                              (std::abs(series.values[k]) + 1e-9));
    }
    series.error_estimate = rel;
  }
  return finalize(std::move(series));
}

InfluenceSeries influence_e_frame(const Worldline& w, const Switching& sw,
                                  const SpectralDensity& spec,
                                  const TimeGrid& coord_grid, int dim,
                                  bool with_error_estimate) {
  // the environment-frame integrand is the comoving one reparameterized by
  // t(tau), with Jacobians d tau/dt: exactly a TimeMap over coordinate time
  TimeMap map;
  map.tau2 = [&w](double t) { return w.proper_time_of_coord(t); };
  map.dtau2 = [&w](double t) {
    return 1.0 / w.lapse(w.proper_time_of_coord(t));
  };
  InfluenceSeries series =
      influence_m_frame(w, sw, spec, coord_grid, dim, &map, with_error_estimate);
  series.frame = Frame::E;
  return series;
}

double influence_thermal_value(const SpectralDensity& spec, double temperature,
                               double t, double rel_tol) {
  if (t <= 0.0) return 0.0;
  const auto f = [&](double om) {
    const double c = om * t;
    // 1 - cos(x) via sin^2 keeps the small-x region exact
    const double s = std::sin(0.5 * c);
    return thermal_factor(temperature, om) * spec(om) * 2.0 * s * s / (om * om);
  };
  const double bp[] = {spec.ir_edge(), 2.0 / t};
  const QuadResult q =
      frequency_integral(f, 0.0, spec.omega_max(), rel_tol, 0.0, bp, 8000);
  return -16.0 * q.value;
}

InfluenceSeries influence_thermal(const SpectralDensity& spec,
                                  double temperature, const TimeGrid& grid,
                                  double rel_tol) {
  InfluenceSeries series;
  series.frame = Frame::Thermal;
  series.time = grid.nodes;
  series.values.resize(grid.nodes.size());
  for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
    series.values[k] =
        influence_thermal_value(spec, temperature, grid.nodes[k], rel_tol);
  }
  return finalize(std::move(series));
}

double influence_const_accel_closed(double a, const SpectralDensity& spec,
                                    double tau, double rel_tol) {
  if (!(a > 0.0)) throw DomainError("influence_const_accel_closed: a > 0");
  if (tau < 0.0) throw DomainError("influence_const_accel_closed: tau >= 0");
  if (tau == 0.0) return 0.0;
  const double down = std::exp(-a * tau);
  const double up = std::exp(a * tau);
  const auto f = [&](double om) {
    const std::complex<double> z(0.0, om / a);
    const std::complex<double> e0 = e1(z);
    const std::complex<double> em = e1(z * down);
    const std::complex<double> ep = e1(z * up);
    return spec(om) * (std::norm(e0 - em) + std::norm(e0 - ep));
  };
  const double bp[] = {spec.ir_edge()};
  const QuadResult q =
      frequency_integral(f, 0.0, spec.omega_max(), rel_tol, 0.0, bp, 8000);
  return -4.0 / (a * a) * q.value;
}

}  // namespace wqd
