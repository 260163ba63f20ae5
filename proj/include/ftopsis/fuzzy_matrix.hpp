#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

#include "ftopsis/fuzzy_number.hpp"

namespace ftopsis {

/// Dense row-major table: rows are alternatives, columns are criteria.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, const T& fill = T{}) : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t row, std::size_t col) noexcept {
    assert(row < rows_ && col < cols_);
    return cells_[row * cols_ + col];
  }
  const T& operator()(std::size_t row, std::size_t col) const noexcept {
    assert(row < rows_ && col < cols_);
    return cells_[row * cols_ + col];
  }

  std::span<T> row(std::size_t r) noexcept { return {cells_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const noexcept { return {cells_.data() + r * cols_, cols_}; }

  std::span<const T> cells() const noexcept { return cells_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> cells_;
};

using FuzzyMatrix = Grid<Tfn>;

}  // namespace ftopsis
