// AArch64 Advanced SIMD is baseline, so no runtime check is needed.

#include <arm_neon.h>

#include <algorithm>

#include "tables.hpp"

namespace mstdp::kernels::detail {

namespace {

void relax_row(Weight* row, const Weight* pivot_row, Weight pivot, std::size_t count) {
  const float64x2_t p = vdupq_n_f64(pivot);
  std::size_t j = 0;
  for (; j + 2 <= count; j += 2) {
    float64x2_t r = vld1q_f64(row + j);
    float64x2_t k = vld1q_f64(pivot_row + j);
    vst1q_f64(row + j, vminq_f64(r, vmaxq_f64(p, k)));
  }
  for (; j < count; ++j) row[j] = std::min(row[j], std::max(pivot, pivot_row[j]));
}

void zero_edge_row(Weight* row, const Weight* a_row, const Weight* b_row, Weight to_a, Weight to_b,
                   std::size_t count) {
  const float64x2_t ta = vdupq_n_f64(to_a);
  const float64x2_t tb = vdupq_n_f64(to_b);
  std::size_t j = 0;
  for (; j + 2 <= count; j += 2) {
    float64x2_t r = vld1q_f64(row + j);
    float64x2_t via_ab = vmaxq_f64(ta, vld1q_f64(b_row + j));
    float64x2_t via_ba = vmaxq_f64(tb, vld1q_f64(a_row + j));
    vst1q_f64(row + j, vminq_f64(vminq_f64(r, via_ab), via_ba));
  }
  for (; j < count; ++j) {
    Weight via_ab = std::max(to_a, b_row[j]);
    Weight via_ba = std::max(to_b, a_row[j]);
    row[j] = std::min(std::min(row[j], via_ab), via_ba);
  }
}

}  // namespace

const KernelTable neon_table{Isa::neon, &relax_row, &zero_edge_row};

}  // namespace mstdp::kernels::detail
