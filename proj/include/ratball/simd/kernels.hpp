#pragma once

// Lane-parallel int32 kernels used by the embedding search. Vectors are
// padded to a multiple of kLaneWidth; padding lanes must hold zeros.
//
// One table per instruction set; the scalar table is the reference and all
// others are tested for exact agreement with it.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace ratball::simd {

inline constexpr std::size_t kLaneWidth = 8;

constexpr std::size_t padded(std::size_t n) {
  return (n + kLaneWidth - 1) / kLaneWidth * kLaneWidth;
}

enum class Isa { automatic, scalar, avx2, neon };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;
  /// acc[i] += x * col[i]
  void (*axpy)(std::int32_t* acc, std::int32_t x, const std::int32_t* col, std::size_t n);
  /// true iff (target[i] - partial[i])^2 <= budget * suffix[i] for all i.
  /// With budget 0 this is exact equality of target and partial.
  bool (*within_reach)(const std::int32_t* target, const std::int32_t* partial,
                       const std::int32_t* suffix, std::int32_t budget, std::size_t n);
};

/// Whether the running CPU can execute the given table.
bool supported(Isa isa);

/// Table for `isa`; Isa::automatic picks the best supported one unless the
/// environment variable RATBALL_KERNELS names another ("scalar", "avx2",
/// "neon"). Throws usage_error for an unsupported explicit request.
const KernelTable& kernels(Isa isa = Isa::automatic);

namespace detail {
const KernelTable& scalar_table();
const KernelTable* avx2_table();  // nullptr when not compiled in
const KernelTable* neon_table();
}  // namespace detail

}  // namespace ratball::simd
