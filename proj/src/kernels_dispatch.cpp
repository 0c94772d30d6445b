#include <cstdlib>
#include <cstring>
#include <string>

#include "wqd/errors.hpp"
#include "wqd/kernels.hpp"

namespace wqd::kernels {

namespace {

Isa detect() {
  if (const char* env = std::getenv("WQDEC_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::Scalar;
    if (std::strcmp(env, "avx2") == 0 && isa_available(Isa::Avx2)) return Isa::Avx2;
    if (std::strcmp(env, "neon") == 0 && isa_available(Isa::Neon)) return Isa::Neon;
  }
#ifdef WQDEC_HAVE_NEON_TU
  return Isa::Neon;
#endif
#ifdef WQDEC_HAVE_AVX2_TU
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

Isa& current() {
  static Isa isa = detect();
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "?";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(WQDEC_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#ifdef WQDEC_HAVE_NEON_TU
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return current(); }

void force_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw DomainError(std::string("kernel ISA not available: ") + isa_name(isa));
  }
  current() = isa;
}

void d1_accumulate(const D1Tables& t, std::span<const double> omega,
                   std::span<const double> weight, std::span<double> out) {
  switch (current()) {
#ifdef WQDEC_HAVE_AVX2_TU
    case Isa::Avx2:
      return d1_accumulate_avx2(t, omega, weight, out);
#endif
#ifdef WQDEC_HAVE_NEON_TU
    case Isa::Neon:
      return d1_accumulate_neon(t, omega, weight, out);
#endif
    default:
      return d1_accumulate_scalar(t, omega, weight, out);
  }
}

void d2_accumulate(const D2Tables& t, std::span<const double> omega,
                   std::span<const double> weight, std::span<double> out) {
  switch (current()) {
#ifdef WQDEC_HAVE_AVX2_TU
    case Isa::Avx2:
      return d2_accumulate_avx2(t, omega, weight, out);
#endif
#ifdef WQDEC_HAVE_NEON_TU
    case Isa::Neon:
      return d2_accumulate_neon(t, omega, weight, out);
#endif
    default:
      return d2_accumulate_scalar(t, omega, weight, out);
  }
}

}  // namespace wqd::kernels
