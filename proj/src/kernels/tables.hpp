#pragma once

#include "mstdp/kernels.hpp"

namespace mstdp::kernels::detail {

extern const KernelTable scalar_table;
#if defined(MSTDP_HAVE_AVX2_KERNELS)
extern const KernelTable avx2_table;
#endif
#if defined(MSTDP_HAVE_NEON_KERNELS)
extern const KernelTable neon_table;
#endif

}  // namespace mstdp::kernels::detail
