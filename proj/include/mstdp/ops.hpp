#pragma once

#include <cstdint>
#include <vector>

namespace mstdp {

/// Tally of (min, max, +) operations. Every pure-DP routine in this library
/// reports one; its value depends on the graph shape only, never on weights.
struct OpCounts {
  std::uint64_t min_count = 0;
  std::uint64_t max_count = 0;
  std::uint64_t add_count = 0;

  std::uint64_t total() const noexcept { return min_count + max_count + add_count; }

  OpCounts& operator+=(const OpCounts& other) noexcept {
    min_count += other.min_count;
    max_count += other.max_count;
    add_count += other.add_count;
    return *this;
  }

  friend OpCounts operator+(OpCounts lhs, const OpCounts& rhs) noexcept { return lhs += rhs; }
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

enum class OpKindTag : std::uint8_t { min, max, add };

/// One batch of identical operations as issued by a kernel call.
struct OpEvent {
  OpKindTag kind;
  std::uint32_t count;
  friend bool operator==(const OpEvent&, const OpEvent&) = default;
};

/// Instrumentation sink. Counts are always kept; the event trace only when
/// enabled, so purity tests can compare the exact operation sequence of two
/// runs.
class OpCounter {
 public:
  explicit OpCounter(bool record_trace = false) : record_trace_(record_trace) {}

  void record(OpKindTag kind, std::uint64_t count) {
    switch (kind) {
      case OpKindTag::min: counts_.min_count += count; break;
      case OpKindTag::max: counts_.max_count += count; break;
      case OpKindTag::add: counts_.add_count += count; break;
    }
    if (record_trace_ && count != 0) {
      trace_.push_back({kind, static_cast<std::uint32_t>(count)});
    }
  }

  const OpCounts& counts() const noexcept { return counts_; }
  const std::vector<OpEvent>& trace() const noexcept { return trace_; }

 private:
  bool record_trace_;
  OpCounts counts_;
  std::vector<OpEvent> trace_;
};

}  // namespace mstdp
