#include "ratball/simd/kernels.hpp"

#include <arm_neon.h>

namespace ratball::simd::detail {

namespace {

void axpy(std::int32_t* acc, std::int32_t x, const std::int32_t* col, std::size_t n) {
  for (std::size_t i = 0; i < n; i += 4) {
    vst1q_s32(acc + i, vmlaq_n_s32(vld1q_s32(acc + i), vld1q_s32(col + i), x));
  }
}

bool within_reach(const std::int32_t* target, const std::int32_t* partial,
                  const std::int32_t* suffix, std::int32_t budget, std::size_t n) {
  uint32x4_t bad = vdupq_n_u32(0);
  for (std::size_t i = 0; i < n; i += 4) {
    const int32x4_t d = vsubq_s32(vld1q_s32(target + i), vld1q_s32(partial + i));
    const int32x4_t lhs = vmulq_s32(d, d);
    const int32x4_t rhs = vmulq_n_s32(vld1q_s32(suffix + i), budget);
    bad = vorrq_u32(bad, vcgtq_s32(lhs, rhs));
  }
  return vmaxvq_u32(bad) == 0;
}

constexpr KernelTable kNeon{Isa::neon, &axpy, &within_reach};

}  // namespace

const KernelTable* neon_table() { return &kNeon; }

}  // namespace ratball::simd::detail
