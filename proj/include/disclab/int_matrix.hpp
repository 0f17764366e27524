#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "disclab/bigint.hpp"

namespace disclab {

// Dense row-major matrix of arbitrary-precision integers. Always at least 1x1.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> row_major);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_int64(std::size_t rows, std::size_t cols, std::span<const std::int64_t> row_major);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const;

  std::span<const BigInt> entries() const noexcept { return data_; }
  std::span<const BigInt> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  bool is_binary() const;   // entries in {0, 1}
  bool is_ternary() const;  // entries in {-1, 0, 1}
  bool is_zero() const;
  bool is_constant() const;

  IntMatrix transposed() const;

  // Row-major int64 copy; nullopt when an entry does not fit.
  std::optional<std::vector<std::int64_t>> to_int64() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

}  // namespace disclab
