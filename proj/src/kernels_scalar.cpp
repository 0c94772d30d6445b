// Reference implementations of the accumulation kernels: plain loops with
// libm trig, kept branch-for-branch equivalent to the SIMD variants.
#include <cmath>
#include <complex>

#include "wqd/bessel.hpp"
#include "wqd/kernels.hpp"

namespace wqd::kernels {

void d1_accumulate_scalar(const D1Tables& t, std::span<const double> omega,
                          std::span<const double> weight,
                          std::span<double> out) {
  const bool has_resets = !t.reset_m.empty();
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const double om = omega[i];
    const double wa = weight[i];
    const double inv_om = 1.0 / om;
    double fmr = 0.0, fmi = 0.0, fpr = 0.0, fpi = 0.0;
    double carry = 0.0;
    for (int c = 0; c < t.n_cells; ++c) {
      if (has_resets) {
        if (t.reset_m[c]) {
          carry += fmr * fmr + fmi * fmi;
          fmr = fmi = 0.0;
        }
        if (t.reset_p[c]) {
          carry += fpr * fpr + fpi * fpi;
          fpr = fpi = 0.0;
        }
      }
      if (om <= t.cut_m[c]) {
        for (int n = 0; n < kNodesPerCell; ++n) {
          const int idx = c * kNodesPerCell + n;
          const double ph = om * t.node_um[idx];
          fmr += t.node_w[idx] * std::cos(ph);
          fmi -= t.node_w[idx] * std::sin(ph);
        }
      } else {
        const double phr = om * t.um_r[c];
        const double phl = om * t.um_l[c];
        fmr += (t.am_r[c] * std::sin(phr) - t.am_l[c] * std::sin(phl)) * inv_om;
        fmi += (t.am_r[c] * std::cos(phr) - t.am_l[c] * std::cos(phl)) * inv_om;
      }
      if (om <= t.cut_p[c]) {
        for (int n = 0; n < kNodesPerCell; ++n) {
          const int idx = c * kNodesPerCell + n;
          const double ph = om * t.node_up[idx];
          fpr += t.node_w[idx] * std::cos(ph);
          fpi -= t.node_w[idx] * std::sin(ph);
        }
      } else {
        const double phr = om * t.up_r[c];
        const double phl = om * t.up_l[c];
        fpr += (t.ap_r[c] * std::sin(phr) - t.ap_l[c] * std::sin(phl)) * inv_om;
        fpi += (t.ap_r[c] * std::cos(phr) - t.ap_l[c] * std::cos(phl)) * inv_om;
      }
      out[c + 1] += wa * (carry + fmr * fmr + fmi * fmi + fpr * fpr + fpi * fpi);
    }
  }
}

void d2_accumulate_scalar(const D2Tables& t, std::span<const double> omega,
                          std::span<const double> weight,
                          std::span<double> out) {
  const int n_nodes = t.n_cells * kNodesPerCell;
  std::vector<double> base_r(n_nodes), base_i(n_nodes);
  std::vector<double> p_r(n_nodes), p_i(n_nodes);

  for (std::size_t i = 0; i < omega.size(); ++i) {
    const double om = omega[i];
    const double wa = weight[i];
    const int mmax = wqd::bessel_truncation_order(om * t.r0);
    const std::vector<double> jm = wqd::bessel_j_array(om * t.r0, mmax);

    for (int n = 0; n < n_nodes; ++n) {
      const double ph = om * t.node_t[n];
      base_r[n] = std::cos(ph);   // exp(-i om t)
      base_i[n] = -std::sin(ph);
      // start the harmonic ladder at m = -mmax: exp(-i mmax Theta)
      const double c = t.node_cth[n];
      const double s = t.node_sth[n];
      double cr = 1.0, ci = 0.0;  // exp(i m Theta) by repeated squaring
      double br = c, bi = -s;
      int e = mmax;
      while (e > 0) {
        if (e & 1) {
          const double nr = cr * br - ci * bi;
          ci = cr * bi + ci * br;
          cr = nr;
        }
        const double nr = br * br - bi * bi;
        bi = 2.0 * br * bi;
        br = nr;
        e >>= 1;
      }
      p_r[n] = cr;
      p_i[n] = ci;
    }

    for (int m = -mmax; m <= mmax; ++m) {
      const double wjm = wa * jm[std::abs(m)] * jm[std::abs(m)];
      double hr = 0.0, hi = 0.0;
      for (int c = 0; c < t.n_cells; ++c) {
        for (int n = 0; n < kNodesPerCell; ++n) {
          const int idx = c * kNodesPerCell + n;
          const double pr = base_r[idx] * p_r[idx] - base_i[idx] * p_i[idx];
          const double pi = base_r[idx] * p_i[idx] + base_i[idx] * p_r[idx];
          hr += t.node_w[idx] * pr;
          hi += t.node_w[idx] * pi;
        }
        out[c + 1] += wjm * (hr * hr + hi * hi);
      }
      if (m < mmax) {
        for (int n = 0; n < n_nodes; ++n) {
          const double nr = p_r[n] * t.node_cth[n] - p_i[n] * t.node_sth[n];
          p_i[n] = p_r[n] * t.node_sth[n] + p_i[n] * t.node_cth[n];
          p_r[n] = nr;
        }
      }
    }
  }
}

}  // namespace wqd::kernels
