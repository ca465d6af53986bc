#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ratball {

/// Dense row-major matrix of 64-bit integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Rows must all have the same length.
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<std::int64_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::int64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<std::int64_t> column(std::size_t c) const;

  std::vector<std::vector<std::int64_t>> to_rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// A * A^T
IntMatrix gram_of_rows(const IntMatrix& a);

std::int64_t dot(std::span<const std::int64_t> x, std::span<const std::int64_t> y);

/// "[[1,0],[0,1]]"
std::string to_string(const IntMatrix& m);

}  // namespace ratball
