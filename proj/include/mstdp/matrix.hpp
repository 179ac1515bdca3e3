#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mstdp/value.hpp"

namespace mstdp {

/// Dense row-major n x n table of weights.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, Weight fill = 0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }

  Weight operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  Weight& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }

  std::span<Weight> row(std::size_t i) noexcept { return {data_.data() + i * n_, n_}; }
  std::span<const Weight> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }

  std::span<const Weight> data() const noexcept { return data_; }

  /// Copies the strict upper triangle onto the lower one.
  void mirror_upper() noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) data_[j * n_ + i] = data_[i * n_ + j];
    }
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Weight> data_;
};

}  // namespace mstdp
