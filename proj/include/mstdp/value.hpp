#pragma once

#include <cstddef>
#include <cstdint>

namespace mstdp {

/// Edge and vertex weights. Only min, max and + are ever applied to them.
using Weight = double;

/// 0-based vertex id. The edge-list format and the CLI use 1-based ids.
using Vertex = std::uint32_t;

/// Stable position of an edge in its graph (file order).
using EdgeIndex = std::uint32_t;

}  // namespace mstdp
