// NEON kernel variants (aarch64; NEON is baseline there, no extra flags).
#include "kernels_impl.hpp"

namespace wqd::kernels {

void d1_accumulate_neon(const D1Tables& t, std::span<const double> omega,
                        std::span<const double> weight, std::span<double> out) {
  d1_accumulate_pack<2>(t, omega, weight, out);
}

void d2_accumulate_neon(const D2Tables& t, std::span<const double> omega,
                        std::span<const double> weight, std::span<double> out) {
  d2_accumulate_pack<2>(t, omega, weight, out);
}

}  // namespace wqd::kernels
