// Shared pack-templated bodies of the accumulation kernels. Included by the
// per-ISA translation units (kernels_avx2.cpp, kernels_neon.cpp), which are
// the only places this header may be used: it requires the matching
// -m flags on the TU.
#pragma once

#include <algorithm>
#include <cmath>

#include "wqd/bessel.hpp"
#include "wqd/kernels.hpp"
#include "wqd/simd/pack.hpp"
#include "wqd/simd/sincos.hpp"

namespace wqd::kernels {

template <int W>
void d1_accumulate_pack(const D1Tables& t, std::span<const double> omega,
                        std::span<const double> weight,
                        std::span<double> out) {
  using P = wqd::simd::pack<W>;
  std::size_t i = 0;
  for (; i + W <= omega.size(); i += W) {
    const P om = P::load(&omega[i]);
    const P wa = P::load(&weight[i]);
    const P inv_om = P::broadcast(1.0) / om;
    const double om_lo = omega[i];
    const double om_hi = omega[i + W - 1];

    P fmr = P::broadcast(0.0), fmi = fmr, fpr = fmr, fpi = fmr;
    P carry = P::broadcast(0.0);
    const bool has_resets = !t.reset_m.empty();

    for (int c = 0; c < t.n_cells; ++c) {
      const int base = c * kNodesPerCell;
      if (has_resets) {
        if (t.reset_m[c]) {
          carry = fmadd(fmr, fmr, fmadd(fmi, fmi, carry));
          fmr = P::broadcast(0.0);
          fmi = fmr;
        }
        if (t.reset_p[c]) {
          carry = fmadd(fpr, fpr, fmadd(fpi, fpi, carry));
          fpr = P::broadcast(0.0);
          fpi = fpr;
        }
      }
      for (int br = 0; br < 2; ++br) {
        const double cut = br == 0 ? t.cut_m[c] : t.cut_p[c];
        const double* node_u = br == 0 ? t.node_um.data() : t.node_up.data();
        const double al = br == 0 ? t.am_l[c] : t.ap_l[c];
        const double ar = br == 0 ? t.am_r[c] : t.ap_r[c];
        const double ul = br == 0 ? t.um_l[c] : t.up_l[c];
        const double ur = br == 0 ? t.um_r[c] : t.up_r[c];

        P gr = P::broadcast(0.0), gi = gr;
        const bool any_gauss = om_lo <= cut;
        const bool any_ibp = om_hi > cut;
        if (any_gauss) {
          for (int n = 0; n < kNodesPerCell; ++n) {
            const P w = P::broadcast(t.node_w[base + n]);
            P s, co;
            wqd::simd::sincos(om * P::broadcast(node_u[base + n]), s, co);
            gr = fmadd(w, co, gr);
            gi = gi - w * s;
          }
        }
        if (any_ibp) {
          P sr, cr, sl, cl;
          wqd::simd::sincos(om * P::broadcast(ur), sr, cr);
          wqd::simd::sincos(om * P::broadcast(ul), sl, cl);
          const P ar_p = P::broadcast(ar);
          const P al_p = P::broadcast(al);
          const P ir = (ar_p * sr - al_p * sl) * inv_om;
          const P ii = (ar_p * cr - al_p * cl) * inv_om;
          if (any_gauss) {
            const P gauss_mask = cmp_ge(P::broadcast(cut), om);
            gr = blend(gauss_mask, gr, ir);
            gi = blend(gauss_mask, gi, ii);
          } else {
            gr = ir;
            gi = ii;
          }
        }
        if (br == 0) {
          fmr = fmr + gr;
          fmi = fmi + gi;
        } else {
          fpr = fpr + gr;
          fpi = fpi + gi;
        }
      }
      P nrm = fmadd(fmr, fmr, fmadd(fmi, fmi, carry));
      nrm = fmadd(fpr, fpr, fmadd(fpi, fpi, nrm));
      out[c + 1] += hsum(wa * nrm);
    }
  }
  if (i < omega.size()) {
    d1_accumulate_scalar(t, omega.subspan(i), weight.subspan(i), out);
  }
}

template <int W>
void d2_accumulate_pack(const D2Tables& t, std::span<const double> omega,
                        std::span<const double> weight,
                        std::span<double> out) {
  using P = wqd::simd::pack<W>;
  static_assert(kNodesPerCell % W == 0 || W == 4);
  const int n_nodes = t.n_cells * kNodesPerCell;
  std::vector<double> base_r(n_nodes), base_i(n_nodes);
  std::vector<double> p_r(n_nodes), p_i(n_nodes);

  for (std::size_t i = 0; i < omega.size(); ++i) {
    const double om = omega[i];
    const double wa = weight[i];
    const int mmax = wqd::bessel_truncation_order(om * t.r0);
    const std::vector<double> jm = wqd::bessel_j_array(om * t.r0, mmax);

    for (int n = 0; n + W <= n_nodes; n += W) {
      P s, c;
      wqd::simd::sincos(P::broadcast(om) * P::load(&t.node_t[n]), s, c);
      c.store(&base_r[n]);
      (P::broadcast(0.0) - s).store(&base_i[n]);
    }
    for (int n = (n_nodes / W) * W; n < n_nodes; ++n) {
      base_r[n] = std::cos(om * t.node_t[n]);
      base_i[n] = -std::sin(om * t.node_t[n]);
    }
    // exp(-i mmax Theta) by repeated squaring, lane-parallel over nodes
    for (int n = 0; n < n_nodes; ++n) {
      const double c = t.node_cth[n];
      const double s = t.node_sth[n];
      double cr = 1.0, ci = 0.0, br = c, bi = -s;
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
        const int base = c * kNodesPerCell;
        P ar = P::broadcast(0.0), ai = ar;
        for (int n = 0; n < kNodesPerCell; n += W) {
          const P w = P::load(&t.node_w[base + n]);
          const P b_r = P::load(&base_r[base + n]);
          const P b_i = P::load(&base_i[base + n]);
          const P q_r = P::load(&p_r[base + n]);
          const P q_i = P::load(&p_i[base + n]);
          const P prod_r = b_r * q_r - b_i * q_i;
          const P prod_i = fmadd(b_r, q_i, b_i * q_r);
          ar = fmadd(w, prod_r, ar);
          ai = fmadd(w, prod_i, ai);
        }
        hr += hsum(ar);
        hi += hsum(ai);
        out[c + 1] += wjm * (hr * hr + hi * hi);
      }
      if (m < mmax) {
        for (int n = 0; n + W <= n_nodes; n += W) {
          const P q_r = P::load(&p_r[n]);
          const P q_i = P::load(&p_i[n]);
          const P cth = P::load(&t.node_cth[n]);
          const P sth = P::load(&t.node_sth[n]);
          (q_r * cth - q_i * sth).store(&p_r[n]);
          fmadd(q_r, sth, q_i * cth).store(&p_i[n]);
        }
        for (int n = (n_nodes / W) * W; n < n_nodes; ++n) {
          const double nr = p_r[n] * t.node_cth[n] - p_i[n] * t.node_sth[n];
          p_i[n] = p_r[n] * t.node_sth[n] + p_i[n] * t.node_cth[n];
          p_r[n] = nr;
        }
      }
    }
  }
}

}  // namespace wqd::kernels
