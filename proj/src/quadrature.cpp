#include "wqd/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "wqd/bessel.hpp"
#include "wqd/errors.hpp"

namespace wqd {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr double kXgk[15] = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

constexpr double kWgk[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

constexpr double kWg7[7] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

// 7-point Gauss-Legendre on [-1, 1].
constexpr double kXgl7[7] = {-0.949107912342758524526189684047851,
                             -0.741531185599394439863864773280788,
                             -0.405845151377397166906606412076961,
                             0.0,
                             0.405845151377397166906606412076961,
                             0.741531185599394439863864773280788,
                             0.949107912342758524526189684047851};

struct Panel {
  double lo, hi;
  double value;
  double err;
  int seq;  // creation order: deterministic tie-break
};

struct PanelWorse {
  bool operator()(const Panel& a, const Panel& b) const {
    if (a.err != b.err) return a.err < b.err;
    return a.seq > b.seq;
  }
};

Panel eval_panel(const std::function<double(double)>& f, double lo, double hi,
                 int seq) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  double q15 = 0.0, q7 = 0.0;
  for (int j = 0; j < 15; ++j) {
    const double y = f(c + h * kXgk[j]);
    q15 += kWgk[j] * y;
    if (j % 2 == 1) q7 += kWg7[j / 2] * y;
  }
  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.value = q15 * h;
  p.err = std::abs(q15 - q7) * h;
  p.seq = seq;
  return p;
}

}  // namespace

TimeGrid TimeGrid::uniform(double tau_max, double step,
                           std::span<const double> breakpoints) {
  if (!(tau_max > 0.0) || !(step > 0.0)) {
    throw DomainError("TimeGrid: tau_max and step must be positive");
  }
  TimeGrid g;
  g.tau_max = tau_max;
  g.step = step;
  const std::size_t n = static_cast<std::size_t>(std::ceil(tau_max / step - 1e-9));
  g.nodes.reserve(n + 1 + breakpoints.size());
  for (std::size_t k = 0; k < n; ++k) g.nodes.push_back(k * step);
  g.nodes.push_back(tau_max);
  for (double b : breakpoints) {
    if (b > 0.0 && b < tau_max) g.nodes.push_back(b);
  }
  std::sort(g.nodes.begin(), g.nodes.end());
  // drop near-duplicates (breakpoint landing on a uniform node)
  std::vector<double> dedup;
  dedup.reserve(g.nodes.size());
  for (double x : g.nodes) {
    if (dedup.empty() || x - dedup.back() > 1e-12 * (1.0 + tau_max)) {
      dedup.push_back(x);
    }
  }
  g.nodes = std::move(dedup);
  return g;
}

QuadResult frequency_integral(const std::function<double(double)>& f, double lo,
                              double hi, double rel_tol, double abs_tol,
                              std::span<const double> breakpoints,
                              int max_panels) {
  QuadResult out;
  if (lo == hi) return out;

  std::vector<double> edges{lo, hi};
  for (double b : breakpoints) {
    if (b > lo && b < hi) edges.push_back(b);
  }
  std::sort(edges.begin(), edges.end());

  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
  int seq = 0;
  double value = 0.0, err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = eval_panel(f, edges[i], edges[i + 1], seq++);
    value += p.value;
    err += p.err;
    heap.push(p);
  }

  while (seq < max_panels) {
    const double tol = std::max(abs_tol, rel_tol * std::abs(value));
    if (err <= tol) break;
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {  // interval at rounding floor
      heap.push(worst);
      break;
    }
    Panel a = eval_panel(f, worst.lo, mid, seq++);
    Panel b = eval_panel(f, mid, worst.hi, seq++);
    value += a.value + b.value - worst.value;
    err += a.err + b.err - worst.err;
    heap.push(a);
    heap.push(b);
  }

  out.value = value;
  out.error_estimate = err;
  out.converged = err <= std::max(abs_tol, rel_tol * std::abs(value)) + 1e-300;
  return out;
}

std::vector<double> cumulative_double_time(
    const std::function<std::complex<double>(double, double)>& kernel,
    const TimeGrid& grid, double* max_imag_residual) {
  const std::vector<double>& x = grid.nodes;
  const std::size_t n = x.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;

  // trapezoid weights over nodes 0..k, updated incrementally
  std::vector<double> w(n, 0.0);
  std::vector<std::complex<double>> row(n), col(n), prev_row(n), prev_col(n);
  std::vector<std::complex<double>> diag(n);

  std::complex<double> s(0.0, 0.0);
  double max_imag = 0.0;

  diag[0] = kernel(x[0], x[0]);
  prev_row[0] = diag[0];
  prev_col[0] = diag[0];

  for (std::size_t k = 1; k < n; ++k) {
    // border strip: row K(x_k, .) and column K(., x_k)
    for (std::size_t j = 0; j < k; ++j) {
      row[j] = kernel(x[k], x[j]);
      col[j] = kernel(x[j], x[k]);
    }
    diag[k] = kernel(x[k], x[k]);
    row[k] = diag[k];
    col[k] = diag[k];

    std::complex<double> dot_row_k(0.0, 0.0), dot_col_k(0.0, 0.0);
    std::complex<double> dot_row_p(0.0, 0.0), dot_col_p(0.0, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
      dot_row_k += w[j] * row[j];
      dot_col_k += w[j] * col[j];
      dot_row_p += w[j] * prev_row[j];
      dot_col_p += w[j] * prev_col[j];
    }

    // weight increment: h/2 each on nodes k-1 and k
    const double d = 0.5 * (x[k] - x[k - 1]);
    s += d * (dot_row_k + dot_col_k + dot_row_p + dot_col_p);
    s += d * d * (diag[k - 1] + diag[k] + row[k - 1] + col[k - 1]);

    w[k - 1] += d;
    w[k] += d;
    std::swap(prev_row, row);
    std::swap(prev_col, col);

    max_imag = std::max(max_imag, std::abs(s.imag()));
    out[k] = s.real();
    if (std::abs(s.imag()) > 1e-6 * std::abs(s.real()) + 1e-12) {
      throw ConventionError(
          "cumulative_double_time: imaginary residue above tolerance; kernel "
          "is not Hermitian-symmetric");
    }
  }
  if (max_imag_residual) *max_imag_residual = max_imag;
  return out;
}

std::complex<double> angular_kernel(int dim, double omega, double dx_abs) {
  if (dim == 1) return {2.0 * std::cos(omega * dx_abs), 0.0};
  if (dim == 2) return {2.0 * M_PI * bessel_j0(omega * std::abs(dx_abs)), 0.0};
  throw DomainError("angular_kernel: spatial dimension must be 1 or 2");
}

void gauss_legendre7(double lo, double hi, double* nodes, double* weights) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  for (int j = 0; j < 7; ++j) {
    nodes[j] = c + h * kXgl7[j];
    weights[j] = h * kWg7[j];
  }
}

}  // namespace wqd
