// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>

#include "tables.hpp"

namespace mstdp::kernels::detail {

namespace {

// Operand order matters only for NaN, which validated inputs never contain.

void relax_row(Weight* row, const Weight* pivot_row, Weight pivot, std::size_t count) {
  const __m256d p = _mm256_set1_pd(pivot);
  std::size_t j = 0;
  for (; j + 8 <= count; j += 8) {
    __m256d r0 = _mm256_loadu_pd(row + j);
    __m256d r1 = _mm256_loadu_pd(row + j + 4);
    __m256d k0 = _mm256_loadu_pd(pivot_row + j);
    __m256d k1 = _mm256_loadu_pd(pivot_row + j + 4);
    _mm256_storeu_pd(row + j, _mm256_min_pd(r0, _mm256_max_pd(p, k0)));
    _mm256_storeu_pd(row + j + 4, _mm256_min_pd(r1, _mm256_max_pd(p, k1)));
  }
  for (; j + 4 <= count; j += 4) {
    __m256d r = _mm256_loadu_pd(row + j);
    __m256d k = _mm256_loadu_pd(pivot_row + j);
    _mm256_storeu_pd(row + j, _mm256_min_pd(r, _mm256_max_pd(p, k)));
  }
  for (; j < count; ++j) row[j] = std::min(row[j], std::max(pivot, pivot_row[j]));
}

void zero_edge_row(Weight* row, const Weight* a_row, const Weight* b_row, Weight to_a, Weight to_b,
                   std::size_t count) {
  const __m256d ta = _mm256_set1_pd(to_a);
  const __m256d tb = _mm256_set1_pd(to_b);
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    __m256d r = _mm256_loadu_pd(row + j);
    __m256d via_ab = _mm256_max_pd(ta, _mm256_loadu_pd(b_row + j));
    __m256d via_ba = _mm256_max_pd(tb, _mm256_loadu_pd(a_row + j));
    _mm256_storeu_pd(row + j, _mm256_min_pd(_mm256_min_pd(r, via_ab), via_ba));
  }
  for (; j < count; ++j) {
    Weight via_ab = std::max(to_a, b_row[j]);
    Weight via_ba = std::max(to_b, a_row[j]);
    row[j] = std::min(std::min(row[j], via_ab), via_ba);
  }
}

}  // namespace

const KernelTable avx2_table{Isa::avx2, &relax_row, &zero_edge_row};

}  // namespace mstdp::kernels::detail
