#include "oracle_utils.hpp"

#include <cmath>

#include "wqd/quadrature.hpp"

namespace wqd::oracle {

std::complex<double> e1_brute(std::complex<double> z) {
  const double az = std::abs(z);
  const double upper = std::max(2.0, 60.0 / az);
  const auto fre = [&](double u) {
    return std::real(std::exp(-z * u) / u);
  };
  const auto fim = [&](double u) {
    return std::imag(std::exp(-z * u) / u);
  };
  const QuadResult re = frequency_integral(fre, 1.0, upper, 1e-13, 1e-15, {}, 20000);
  const QuadResult im = frequency_integral(fim, 1.0, upper, 1e-13, 1e-15, {}, 20000);

  // asymptotic tail: int_U^inf = e^{-zU} sum_k (-1)^k k! / (z U)^{k+1} / ...
  std::complex<double> tail(0.0, 0.0);
  std::complex<double> term = 1.0 / (z * upper);
  for (int k = 0; k < 30; ++k) {
    tail += term;
    term *= -static_cast<double>(k + 1) / (z * upper);
    if (std::abs(term) < 1e-20) break;
  }
  tail *= std::exp(-z * upper);
  return std::complex<double>(re.value, im.value) + tail;
}

double j0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= -q / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return sum;
}

double static_influence_freq(const wqd::SpectralDensity& spec, double tau) {
  // dense Simpson from just inside the IR edge (the uniform spectrum jumps
  // there and the endpoint must see the interior value); even integrand, so
  // double the half line
  const double lo = spec.ir_edge() > 0.0 ? spec.ir_edge() * (1.0 + 1e-12) : 0.0;
  const double hi = spec.omega_max();
  const int n = 400000;  // even
  const double h = (hi - lo) / n;
  const auto f = [&](double w) {
    if (w < 1e-12) return 0.0;  // Ohmic-family integrand vanishes at 0
    const double s = std::sin(0.5 * w * tau);
    return spec(w) * 2.0 * s * s / (w * w);
  };
  double sum = f(lo) + f(hi);
  for (int k = 1; k < n; ++k) sum += f(lo + k * h) * (k % 2 ? 4.0 : 2.0);
  return -16.0 * sum * h / 3.0;
}

namespace {

// trapezoid transform F_b(w) = sum_j h_j g_j exp(-i w u_b(s_j)) with
// unresolvable cells dropped
struct BranchSamples {
  std::vector<double> weight;  // trapezoid weight * g
  std::vector<double> u;
};

double mapped_influence(const wqd::SpectralDensity& spec,
                        const BranchSamples& bm, const BranchSamples& bp,
                        double h) {
  const auto transform = [&](const BranchSamples& b, double w) {
    std::complex<double> f(0.0, 0.0);
    for (std::size_t j = 0; j < b.u.size(); ++j) {
      if (j + 1 < b.u.size() && w * (b.u[j + 1] - b.u[j]) > M_PI) continue;
      if (j > 0 && w * (b.u[j] - b.u[j - 1]) > M_PI) continue;
      f += b.weight[j] * std::exp(std::complex<double>(0.0, -w * b.u[j]));
    }
    return std::norm(f);
  };
  const auto f = [&](double w) {
    return spec(w) * (transform(bm, w) + transform(bp, w));
  };
  const double bp_edges[] = {spec.ir_edge(), 0.5 / h};
  const QuadResult q = frequency_integral(f, 0.0, spec.omega_max(), 1e-8, 0.0,
                                          bp_edges, 20000);
  return -4.0 * q.value;
}

}  // namespace

double influence_direct_quadrature(const wqd::Worldline& w,
                                   const wqd::Switching& sw,
                                   const wqd::SpectralDensity& spec,
                                   double tau, double h) {
  const int n = static_cast<int>(std::round(tau / h));
  std::vector<double> tau2(n + 1), dtau2(n + 1, 1.0);
  for (int j = 0; j <= n; ++j) tau2[j] = j * h;
  return influence_direct_quadrature_mapped(w, sw, spec, tau, h, tau2, dtau2);
}

double influence_direct_quadrature_mapped(
    const wqd::Worldline& w, const wqd::Switching& sw,
    const wqd::SpectralDensity& spec, double tau, double h,
    const std::vector<double>& tau2, const std::vector<double>& dtau2) {
  const int n = static_cast<int>(tau2.size()) - 1;
  BranchSamples bm, bp;
  for (int j = 0; j <= n; ++j) {
    const double trap = (j == 0 || j == n) ? 0.5 * h : h;
    const double g = sw(tau2[j]) * dtau2[j];
    bm.weight.push_back(trap * g);
    bp.weight.push_back(trap * g);
    bm.u.push_back(w.lightcone(tau2[j], 0));
    bp.u.push_back(w.lightcone(tau2[j], 1));
  }
  (void)tau;
  return mapped_influence(spec, bm, bp, h);
}

double influence_banded_superohmic(const wqd::Worldline& w,
                                   const wqd::Switching& sw,
                                   const wqd::SpectralDensity& spec,
                                   double tau, double h) {
  const double lam = spec.lambda_uv;
  const double q2 = spec.coupling * spec.coupling;
  const double band = 14.0 / lam;
  const auto kernel = [&](double x) {
    const double c = lam * lam * x * x;
    return q2 * std::sqrt(M_PI) * 0.5 * (1.0 - 0.5 * c) * std::exp(-0.25 * c);
  };
  const int n = static_cast<int>(std::round(tau / h));
  std::vector<double> g(n + 1);
  std::vector<double> u[2];
  for (int j = 0; j <= n; ++j) {
    const double trap = (j == 0 || j == n) ? 0.5 * h : h;
    g[j] = trap * sw(j * h);
    u[0].push_back(w.lightcone(j * h, 0));
    u[1].push_back(w.lightcone(j * h, 1));
  }
  double total = 0.0;
  for (int b = 0; b < 2; ++b) {
    for (int i = 0; i <= n; ++i) {
      total += g[i] * g[i] * kernel(0.0);
      for (int j = i - 1; j >= 0 && u[b][i] - u[b][j] <= band; --j) {
        total += 2.0 * g[i] * g[j] * kernel(u[b][i] - u[b][j]);
      }
    }
  }
  return -2.0 * total;
}

double influence_circular_brute(const wqd::Worldline& w,
                                const wqd::Switching& sw,
                                const wqd::SpectralDensity& spec, double tau,
                                int n_steps) {
  const double h = tau / n_steps;
  std::vector<double> tc(n_steps + 1), xc(n_steps + 1), yc(n_steps + 1),
      lam(n_steps + 1);
  for (int j = 0; j <= n_steps; ++j) {
    const auto p = w.position(j * h);
    tc[j] = p.t;
    xc[j] = p.x;
    yc[j] = p.y;
    lam[j] = sw(j * h);
  }
  double total = 0.0;
  for (int i = 0; i <= n_steps; ++i) {
    for (int j = 0; j <= n_steps; ++j) {
      const double wi = (i == 0 || i == n_steps) ? 0.5 * h : h;
      const double wj = (j == 0 || j == n_steps) ? 0.5 * h : h;
      const double dt = tc[i] - tc[j];
      const double dx = std::hypot(xc[i] - xc[j], yc[i] - yc[j]);
      const auto f = [&](double om) {
        return om * spec(om) * std::cos(om * dt) *
               std::cyl_bessel_j(0.0, om * dx) * 2.0;
      };
      const double edges[] = {spec.ir_edge()};
      const QuadResult q =
          frequency_integral(f, 0.0, spec.omega_max(), 1e-9, 1e-13, edges, 4000);
      total += wi * wj * lam[i] * lam[j] * 2.0 * M_PI * q.value;
    }
  }
  return -2.0 * total;
}

}  // namespace wqd::oracle
