#include <limits>
#include <string>

#include "disclab/error.hpp"
#include "disclab/int_matrix.hpp"

namespace disclab {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::InvalidArgument,
                "matrix dimensions must be positive, got " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  check_dims(rows, cols);
  data_.assign(rows * cols, BigInt(0));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  check_dims(rows_, cols_);
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  check_dims(rows, cols);
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::InvalidArgument, "entry count does not match dimensions");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_int64(std::size_t rows, std::size_t cols, std::span<const std::int64_t> row_major) {
  if (row_major.size() != rows * cols) {
    throw Error(ErrorKind::InvalidArgument, "entry count does not match dimensions");
  }
  std::vector<BigInt> data;
  data.reserve(row_major.size());
  for (auto v : row_major) data.push_back(make_bigint(v));
  return IntMatrix(rows, cols, std::move(data));
}

const BigInt& IntMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw Error(ErrorKind::IndexOutOfRange, "entry index out of range");
  return (*this)(i, j);
}

bool IntMatrix::is_binary() const {
  for (const auto& v : data_)
    if (v != 0 && v != 1) return false;
  return true;
}

bool IntMatrix::is_ternary() const {
  for (const auto& v : data_)
    if (v != 0 && v != 1 && v != -1) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_constant() const {
  for (const auto& v : data_)
    if (v != data_.front()) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::optional<std::vector<std::int64_t>> IntMatrix::to_int64() const {
  std::vector<std::int64_t> out;
  out.reserve(data_.size());
  for (const auto& v : data_) {
    if (!v.fits_slong_p()) return std::nullopt;
    out.push_back(v.get_si());
  }
  return out;
}

}  // namespace disclab
