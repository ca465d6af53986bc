#include "ratball/simd/kernels.hpp"

namespace ratball::simd::detail {

namespace {

void axpy(std::int32_t* acc, std::int32_t x, const std::int32_t* col, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x * col[i];
}

bool within_reach(const std::int32_t* target, const std::int32_t* partial,
                  const std::int32_t* suffix, std::int32_t budget, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::int32_t d = target[i] - partial[i];
    if (d * d > budget * suffix[i]) return false;
  }
  return true;
}

constexpr KernelTable kScalar{Isa::scalar, &axpy, &within_reach};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace ratball::simd::detail
