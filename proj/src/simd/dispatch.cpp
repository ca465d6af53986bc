#include "ratball/simd/kernels.hpp"

#include "ratball/errors.hpp"

#include <cstdlib>
#include <string>

namespace ratball::simd {

namespace detail {
#if !defined(RATBALL_HAVE_AVX2)
const KernelTable* avx2_table() { return nullptr; }
#endif
#if !defined(RATBALL_HAVE_NEON)
const KernelTable* neon_table() { return nullptr; }
#endif
}  // namespace detail

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::automatic: return "automatic";
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::automatic:
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(RATBALL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
      return detail::neon_table() != nullptr;
  }
  return false;
}

namespace {

Isa from_environment() {
  const char* env = std::getenv("RATBALL_KERNELS");
  if (env == nullptr || *env == '\0') return Isa::automatic;
  const std::string name(env);
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  if (name == "neon") return Isa::neon;
  if (name == "automatic") return Isa::automatic;
  throw usage_error("RATBALL_KERNELS: unknown instruction set '" + name + "'");
}

Isa best_supported() {
  if (supported(Isa::avx2)) return Isa::avx2;
  if (supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

}  // namespace

const KernelTable& kernels(Isa isa) {
  if (isa == Isa::automatic) isa = from_environment();
  if (isa == Isa::automatic) isa = best_supported();
  if (!supported(isa)) {
    throw usage_error("instruction set " + std::string(isa_name(isa)) +
                      " is not available on this machine");
  }
  switch (isa) {
    case Isa::avx2: return *detail::avx2_table();
    case Isa::neon: return *detail::neon_table();
    default: return detail::scalar_table();
  }
}

}  // namespace ratball::simd
