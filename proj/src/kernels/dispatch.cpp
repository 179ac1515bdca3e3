#include <cstdlib>
#include <string>

#include "mstdp/errors.hpp"
#include "tables.hpp"

namespace mstdp::kernels {

namespace {

bool cpu_supports(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(MSTDP_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(MSTDP_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& pick_active() {
  if (const char* forced = std::getenv("MSTDP_KERNEL"); forced != nullptr && *forced != '\0') {
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (name(isa) == forced) return table_for(isa);
    }
    throw PreconditionError(std::string("MSTDP_KERNEL names an unknown kernel set: ") + forced);
  }
  return table_for(supported().back());
}

}  // namespace

std::string_view name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

std::vector<Isa> supported() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (cpu_supports(isa)) out.push_back(isa);
  }
  return out;
}

const KernelTable& table_for(Isa isa) {
  if (!cpu_supports(isa)) {
    throw PreconditionError("kernel set '" + std::string(name(isa)) + "' is not available on this CPU");
  }
  switch (isa) {
#if defined(MSTDP_HAVE_AVX2_KERNELS)
    case Isa::avx2: return detail::avx2_table;
#endif
#if defined(MSTDP_HAVE_NEON_KERNELS)
    case Isa::neon: return detail::neon_table;
#endif
    default: return detail::scalar_table;
  }
}

const KernelTable& active() {
  static const KernelTable& table = pick_active();
  return table;
}

}  // namespace mstdp::kernels
