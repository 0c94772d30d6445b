// Small fixed-width SIMD abstraction for the double-precision inner loops.
// pack<1> is the portable scalar fallback; pack<4> wraps AVX2 and is only
// defined in translation units compiled with -mavx2, pack<2> wraps NEON.
#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>

#if defined(__AVX2__)
#include <immintrin.h>
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace wqd::simd {

template <int W> struct pack;

template <> struct pack<1> {
  static constexpr int width = 1;
  double v;

  pack() = default;
  explicit pack(double x) : v(x) {}
  static pack broadcast(double x) { return pack(x); }
  static pack load(const double* p) { return pack(*p); }
  void store(double* p) const { *p = v; }

  friend pack operator+(pack a, pack b) { return pack(a.v + b.v); }
  friend pack operator-(pack a, pack b) { return pack(a.v - b.v); }
  friend pack operator*(pack a, pack b) { return pack(a.v * b.v); }
  friend pack operator/(pack a, pack b) { return pack(a.v / b.v); }
  friend pack fmadd(pack a, pack b, pack c) { return pack(a.v * b.v + c.v); }
  friend pack floor(pack a) { return pack(std::floor(a.v)); }
  friend pack round_nearest(pack a) { return pack(std::nearbyint(a.v)); }
  // mask ops: mask packs hold all-ones / all-zero bit patterns
  friend pack cmp_ge(pack a, pack b) {
    std::uint64_t m = (a.v >= b.v) ? ~0ull : 0ull;
    pack r;
    std::memcpy(&r.v, &m, 8);
    return r;
  }
  friend pack blend(pack mask, pack a, pack b) {  // mask ? a : b
    std::uint64_t m, x, y, z;
    std::memcpy(&m, &mask.v, 8);
    std::memcpy(&x, &a.v, 8);
    std::memcpy(&y, &b.v, 8);
    z = (x & m) | (y & ~m);
    pack r;
    std::memcpy(&r.v, &z, 8);
    return r;
  }
  friend pack xor_sign(pack a, pack sign_mask) {
    std::uint64_t x, s;
    std::memcpy(&x, &a.v, 8);
    std::memcpy(&s, &sign_mask.v, 8);
    x ^= s;
    pack r;
    std::memcpy(&r.v, &x, 8);
    return r;
  }
  friend pack bit_and(pack a, pack b) {
    std::uint64_t x, y;
    std::memcpy(&x, &a.v, 8);
    std::memcpy(&y, &b.v, 8);
    x &= y;
    pack r;
    std::memcpy(&r.v, &x, 8);
    return r;
  }
  friend pack bit_xor(pack a, pack b) {
    std::uint64_t x, y;
    std::memcpy(&x, &a.v, 8);
    std::memcpy(&y, &b.v, 8);
    x ^= y;
    pack r;
    std::memcpy(&r.v, &x, 8);
    return r;
  }
  friend double hsum(pack a) { return a.v; }
};

#if defined(__AVX2__)
template <> struct pack<4> {
  static constexpr int width = 4;
  __m256d v;

  pack() = default;
  explicit pack(__m256d x) : v(x) {}
  static pack broadcast(double x) { return pack(_mm256_set1_pd(x)); }
  static pack load(const double* p) { return pack(_mm256_loadu_pd(p)); }
  void store(double* p) const { _mm256_storeu_pd(p, v); }

  friend pack operator+(pack a, pack b) { return pack(_mm256_add_pd(a.v, b.v)); }
  friend pack operator-(pack a, pack b) { return pack(_mm256_sub_pd(a.v, b.v)); }
  friend pack operator*(pack a, pack b) { return pack(_mm256_mul_pd(a.v, b.v)); }
  friend pack operator/(pack a, pack b) { return pack(_mm256_div_pd(a.v, b.v)); }
  friend pack fmadd(pack a, pack b, pack c) { return pack(_mm256_fmadd_pd(a.v, b.v, c.v)); }
  friend pack floor(pack a) { return pack(_mm256_floor_pd(a.v)); }
  friend pack round_nearest(pack a) {
    return pack(_mm256_round_pd(a.v, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC));
  }
  friend pack cmp_ge(pack a, pack b) { return pack(_mm256_cmp_pd(a.v, b.v, _CMP_GE_OQ)); }
  friend pack blend(pack mask, pack a, pack b) {
    return pack(_mm256_blendv_pd(b.v, a.v, mask.v));
  }
  friend pack xor_sign(pack a, pack sign_mask) { return pack(_mm256_xor_pd(a.v, sign_mask.v)); }
  friend pack bit_and(pack a, pack b) { return pack(_mm256_and_pd(a.v, b.v)); }
  friend pack bit_xor(pack a, pack b) { return pack(_mm256_xor_pd(a.v, b.v)); }
  friend double hsum(pack a) {
    __m128d lo = _mm256_castpd256_pd128(a.v);
    __m128d hi = _mm256_extractf128_pd(a.v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
  }
};
#endif

#if defined(__ARM_NEON) || defined(__aarch64__)
template <> struct pack<2> {
  static constexpr int width = 2;
  float64x2_t v;

  pack() = default;
  explicit pack(float64x2_t x) : v(x) {}
  static pack broadcast(double x) { return pack(vdupq_n_f64(x)); }
  static pack load(const double* p) { return pack(vld1q_f64(p)); }
  void store(double* p) const { vst1q_f64(p, v); }

  friend pack operator+(pack a, pack b) { return pack(vaddq_f64(a.v, b.v)); }
  friend pack operator-(pack a, pack b) { return pack(vsubq_f64(a.v, b.v)); }
  friend pack operator*(pack a, pack b) { return pack(vmulq_f64(a.v, b.v)); }
  friend pack operator/(pack a, pack b) { return pack(vdivq_f64(a.v, b.v)); }
  friend pack fmadd(pack a, pack b, pack c) { return pack(vfmaq_f64(c.v, a.v, b.v)); }
  friend pack floor(pack a) { return pack(vrndmq_f64(a.v)); }
  friend pack round_nearest(pack a) { return pack(vrndnq_f64(a.v)); }
  friend pack cmp_ge(pack a, pack b) {
    return pack(vreinterpretq_f64_u64(vcgeq_f64(a.v, b.v)));
  }
  friend pack blend(pack mask, pack a, pack b) {
    uint64x2_t m = vreinterpretq_u64_f64(mask.v);
    return pack(vbslq_f64(m, a.v, b.v));
  }
  friend pack xor_sign(pack a, pack sign_mask) {
    return pack(vreinterpretq_f64_u64(
        veorq_u64(vreinterpretq_u64_f64(a.v), vreinterpretq_u64_f64(sign_mask.v))));
  }
  friend pack bit_and(pack a, pack b) {
    return pack(vreinterpretq_f64_u64(
        vandq_u64(vreinterpretq_u64_f64(a.v), vreinterpretq_u64_f64(b.v))));
  }
  friend pack bit_xor(pack a, pack b) {
    return pack(vreinterpretq_f64_u64(
        veorq_u64(vreinterpretq_u64_f64(a.v), vreinterpretq_u64_f64(b.v))));
  }
  friend double hsum(pack a) { return vgetq_lane_f64(a.v, 0) + vgetq_lane_f64(a.v, 1); }
};
#endif

}  // namespace wqd::simd
