// AVX2 kernel variants. This TU is compiled with -mavx2 -mfma; nothing here
// may be called unless cpuid reports both (see kernels_dispatch.cpp).
#include "kernels_impl.hpp"

namespace wqd::kernels {

void d1_accumulate_avx2(const D1Tables& t, std::span<const double> omega,
                        std::span<const double> weight, std::span<double> out) {
  d1_accumulate_pack<4>(t, omega, weight, out);
}

void d2_accumulate_avx2(const D2Tables& t, std::span<const double> omega,
                        std::span<const double> weight, std::span<double> out) {
  d2_accumulate_pack<4>(t, omega, weight, out);
}

}  // namespace wqd::kernels
