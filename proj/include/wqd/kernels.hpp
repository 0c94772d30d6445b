// Hot inner loops of the influence integrators.
//
// The d1 kernel accumulates, for every frequency node and every grid prefix,
// the squared magnitudes of the two light-cone phase transforms
//   F_b(w, tau_k) = int_0^{tau_k} g(s) exp(-i w u_b(s)) ds ,
// with per-cell 4-point Gauss quadrature where the phase is resolved and the
// boundary terms of one integration by parts where it oscillates too fast
// for the grid (the interior boundary terms of adjacent unresolved cells
// cancel, so this evaluates the asymptotic tail at no extra cost).
//
// The d2 kernel accumulates the angular-harmonic decomposition of the
// circular-motion transform: |H_m(w, tau_k)|^2 weighted by J_m(w r0)^2.
//
// Scalar reference implementations live in kernels_scalar.cpp; SIMD variants
// (AVX2/NEON) are compiled from the shared pack template and selected at
// runtime. Frequencies must be ascending.
#pragma once

#include <span>
#include <vector>

namespace wqd::kernels {

inline constexpr int kNodesPerCell = 4;
// max phase span (radians) across one cell handled by the Gauss rule
inline constexpr double kResolveTheta = 2.4;

struct D1Tables {
  int n_cells = 0;
  // per GL node, flattened [cell*4 + n]
  std::vector<double> node_w;   // g(s_n) * gauss weight
  std::vector<double> node_um;  // u_minus(s_n)
  std::vector<double> node_up;  // u_plus(s_n)
  // per cell: boundary-term amplitudes g/u' and phases at the cell edges
  std::vector<double> am_l, am_r, ap_l, ap_r;
  std::vector<double> um_l, um_r, up_l, up_r;
  // per cell: largest omega the Gauss rule resolves, per branch
  std::vector<double> cut_m, cut_p;
  // cluster starts: 1 where the branch's phase coordinate was rebased after
  // a gap wider than the spectral kernel's support; the running transform is
  // banked into a carry and restarted (cross-cluster terms integrate to
  // zero against the spectrum). Empty means no resets anywhere.
  std::vector<unsigned char> reset_m, reset_p;
};

struct D2Tables {
  int n_cells = 0;
  double r0 = 1.0;
  // per GL node, flattened [cell*4 + n]
  std::vector<double> node_w;            // lambda(s_n) * gauss weight
  std::vector<double> node_t;            // t(s_n)
  std::vector<double> node_cth, node_sth;  // cos/sin Theta(s_n)
};

// out[k+1] += weight[i] * (|F-|^2 + |F+|^2) at (omega[i], prefix k); out[0]
// is left untouched. out.size() == n_cells + 1.
void d1_accumulate_scalar(const D1Tables& t, std::span<const double> omega,
                          std::span<const double> weight,
                          std::span<double> out);

// out[k+1] += weight[i] * sum_m J_m(omega r0)^2 |H_m(omega, prefix k)|^2.
void d2_accumulate_scalar(const D2Tables& t, std::span<const double> omega,
                          std::span<const double> weight,
                          std::span<double> out);

#ifdef WQDEC_HAVE_AVX2_TU
void d1_accumulate_avx2(const D1Tables& t, std::span<const double> omega,
                        std::span<const double> weight, std::span<double> out);
void d2_accumulate_avx2(const D2Tables& t, std::span<const double> omega,
                        std::span<const double> weight, std::span<double> out);
#endif
#ifdef WQDEC_HAVE_NEON_TU
void d1_accumulate_neon(const D1Tables& t, std::span<const double> omega,
                        std::span<const double> weight, std::span<double> out);
void d2_accumulate_neon(const D2Tables& t, std::span<const double> omega,
                        std::span<const double> weight, std::span<double> out);
#endif

enum class Isa { Scalar, Avx2, Neon };
const char* isa_name(Isa isa);
bool isa_available(Isa isa);
Isa active_isa();
void force_isa(Isa isa);  // test hook; throws DomainError if unavailable

// runtime-dispatched entry points
void d1_accumulate(const D1Tables& t, std::span<const double> omega,
                   std::span<const double> weight, std::span<double> out);
void d2_accumulate(const D2Tables& t, std::span<const double> omega,
                   std::span<const double> weight, std::span<double> out);

}  // namespace wqd::kernels
