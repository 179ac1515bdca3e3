#include <algorithm>

#include "tables.hpp"

namespace mstdp::kernels::detail {

namespace {

void relax_row(Weight* row, const Weight* pivot_row, Weight pivot, std::size_t count) {
  for (std::size_t j = 0; j < count; ++j) row[j] = std::min(row[j], std::max(pivot, pivot_row[j]));
}

void zero_edge_row(Weight* row, const Weight* a_row, const Weight* b_row, Weight to_a, Weight to_b,
                   std::size_t count) {
  for (std::size_t j = 0; j < count; ++j) {
    Weight via_ab = std::max(to_a, b_row[j]);
    Weight via_ba = std::max(to_b, a_row[j]);
    row[j] = std::min(std::min(row[j], via_ab), via_ba);
  }
}

}  // namespace

const KernelTable scalar_table{Isa::scalar, &relax_row, &zero_edge_row};

}  // namespace mstdp::kernels::detail
