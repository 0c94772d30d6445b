// Vectorized sin/cos for the phase accumulation loops.
//
// Cody-Waite reduction with a 2-part pi/2 (fdlibm constants) keeps the result
// accurate to ~1 ulp for |x| up to ~2^28, far beyond the phases the influence
// integrators produce after their resolvability truncation. Polynomials are
// the classic fdlibm kernel coefficients on |r| <= pi/4.
#pragma once

#include "wqd/simd/pack.hpp"

namespace wqd::simd {

namespace detail {
inline constexpr double kTwoOverPi = 6.36619772367581382433e-01;
inline constexpr double kPio2Hi = 1.57079632673412561417e+00;
inline constexpr double kPio2Lo = 6.07710050650619224932e-11;

inline constexpr double kS1 = -1.66666666666666324348e-01;
inline constexpr double kS2 = 8.33333333332248946124e-03;
inline constexpr double kS3 = -1.98412698298579493134e-04;
inline constexpr double kS4 = 2.75573137070700676789e-06;
inline constexpr double kS5 = -2.50507602534068634195e-08;
inline constexpr double kS6 = 1.58969099521155010221e-10;

inline constexpr double kC1 = 4.16666666666666019037e-02;
inline constexpr double kC2 = -1.38888888888741095749e-03;
inline constexpr double kC3 = 2.48015872894767294178e-05;
inline constexpr double kC4 = -2.75573143513906633035e-07;
inline constexpr double kC5 = 2.08757232129817482790e-09;
inline constexpr double kC6 = -1.13596475577881948265e-11;
}  // namespace detail

// Writes sin(x) and cos(x) for each lane.
template <int W>
inline void sincos(pack<W> x, pack<W>& s_out, pack<W>& c_out) {
  using P = pack<W>;
  using namespace detail;

  const P k = round_nearest(x * P::broadcast(kTwoOverPi));
  // r = x - k*pi/2, split to preserve the low bits of the reduction
  P r = fmadd(k, P::broadcast(-kPio2Hi), x);
  r = fmadd(k, P::broadcast(-kPio2Lo), r);

  P z = r * r;
  // defensive: if |r| > pi/4 the reduction lost the argument (phase beyond
  // the representable budget); clamp so downstream amplitudes stay bounded
  const P ok = cmp_ge(P::broadcast(0.645), z);
  r = blend(ok, r, P::broadcast(0.0));
  z = blend(ok, z, P::broadcast(0.0));

  P sp = P::broadcast(kS6);
  sp = fmadd(sp, z, P::broadcast(kS5));
  sp = fmadd(sp, z, P::broadcast(kS4));
  sp = fmadd(sp, z, P::broadcast(kS3));
  sp = fmadd(sp, z, P::broadcast(kS2));
  sp = fmadd(sp, z, P::broadcast(kS1));
  const P sin_r = fmadd(sp * z, r, r);

  P cp = P::broadcast(kC6);
  cp = fmadd(cp, z, P::broadcast(kC5));
  cp = fmadd(cp, z, P::broadcast(kC4));
  cp = fmadd(cp, z, P::broadcast(kC3));
  cp = fmadd(cp, z, P::broadcast(kC2));
  cp = fmadd(cp, z, P::broadcast(kC1));
  const P cos_r = fmadd(cp, z * z, fmadd(z, P::broadcast(-0.5), P::broadcast(1.0)));

  // quadrant m = k mod 4 in {0,1,2,3}
  const P m = fmadd(floor(k * P::broadcast(0.25)), P::broadcast(-4.0), k);
  const P ge1 = cmp_ge(m, P::broadcast(0.5));
  const P ge2 = cmp_ge(m, P::broadcast(1.5));
  const P ge3 = cmp_ge(m, P::broadcast(2.5));

  const P sign_bit = P::broadcast(-0.0);
  const P swap_mask = bit_xor(bit_xor(ge1, ge2), ge3);  // m odd: swap sin/cos
  const P sin_flip = bit_and(ge2, sign_bit);            // m in {2,3}
  const P cos_flip = bit_and(bit_xor(ge1, ge3), sign_bit);  // m in {1,2}

  const P s_base = blend(swap_mask, cos_r, sin_r);
  const P c_base = blend(swap_mask, sin_r, cos_r);
  s_out = xor_sign(s_base, sin_flip);
  c_out = xor_sign(c_base, cos_flip);
}

}  // namespace wqd::simd
