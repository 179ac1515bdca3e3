#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "mstdp/value.hpp"

// Row kernels for the min-max dynamic program. Each kernel has a scalar
// reference and optional SIMD variants; the variant is picked once at runtime
// from the CPU features (override with MSTDP_KERNEL=scalar|avx2|neon). All
// variants perform the same elementwise min/max operations, so their outputs
// are bit-identical.

namespace mstdp::kernels {

enum class Isa { scalar, avx2, neon };

/// row[j] = min(row[j], max(pivot, pivot_row[j]))  for j < count
using RelaxRowFn = void (*)(Weight* row, const Weight* pivot_row, Weight pivot, std::size_t count);

/// row[j] = min(min(row[j], max(to_a, b_row[j])), max(to_b, a_row[j]))  for j < count
using ZeroEdgeRowFn = void (*)(Weight* row, const Weight* a_row, const Weight* b_row, Weight to_a,
                               Weight to_b, std::size_t count);

struct KernelTable {
  Isa isa;
  RelaxRowFn relax_row;
  ZeroEdgeRowFn zero_edge_row;
};

std::string_view name(Isa isa) noexcept;

/// ISAs compiled in and supported by this CPU, scalar first.
std::vector<Isa> supported();

/// Throws PreconditionError when `isa` is unavailable here.
const KernelTable& table_for(Isa isa);

/// Best supported table, or the one named by MSTDP_KERNEL.
const KernelTable& active();

}  // namespace mstdp::kernels
