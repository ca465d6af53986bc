// Compiled with -mavx2; only reached after a runtime CPU check.
#include "ratball/simd/kernels.hpp"

#include <immintrin.h>

namespace ratball::simd::detail {

namespace {

void axpy(std::int32_t* acc, std::int32_t x, const std::int32_t* col, std::size_t n) {
  const __m256i vx = _mm256_set1_epi32(x);
  for (std::size_t i = 0; i < n; i += 8) {
    auto* pa = reinterpret_cast<__m256i*>(acc + i);
    const __m256i va = _mm256_loadu_si256(pa);
    const __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col + i));
    _mm256_storeu_si256(pa, _mm256_add_epi32(va, _mm256_mullo_epi32(vx, vc)));
  }
}

bool within_reach(const std::int32_t* target, const std::int32_t* partial,
                  const std::int32_t* suffix, std::int32_t budget, std::size_t n) {
  const __m256i vb = _mm256_set1_epi32(budget);
  __m256i bad = _mm256_setzero_si256();
  for (std::size_t i = 0; i < n; i += 8) {
    const __m256i vt = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(target + i));
    const __m256i vp = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(partial + i));
    const __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(suffix + i));
    const __m256i d = _mm256_sub_epi32(vt, vp);
    const __m256i lhs = _mm256_mullo_epi32(d, d);
    const __m256i rhs = _mm256_mullo_epi32(vb, vs);
    bad = _mm256_or_si256(bad, _mm256_cmpgt_epi32(lhs, rhs));
  }
  return _mm256_testz_si256(bad, bad) != 0;
}

constexpr KernelTable kAvx2{Isa::avx2, &axpy, &within_reach};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2; }

}  // namespace ratball::simd::detail
