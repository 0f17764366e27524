#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "disclab/bigint.hpp"
#include "disclab/int_matrix.hpp"

namespace disclab {

// Row and column selection; both lists sorted, distinct and nonempty.
struct SubmatrixIndex {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  friend bool operator==(const SubmatrixIndex&, const SubmatrixIndex&) = default;
};

void validate(const SubmatrixIndex& idx, const IntMatrix& parent);

// Fraction-free (Bareiss) elimination with full pivoting.
BigInt det_exact(const IntMatrix& m);

// Cofactor expansion along the first row; exponential, meant as a cross-check
// for small orders (throws InvalidArgument above order 8).
BigInt det_cofactor(const IntMatrix& m);

// Bareiss on a row-major int64 square matrix with 128-bit intermediates.
// Returns nullopt if the Hadamard bound of the input does not fit in 62 bits,
// in which case callers fall back to det_exact.
std::optional<std::int64_t> det_int64(std::span<const std::int64_t> square, std::size_t n);

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);
IntMatrix pad_zeros(const IntMatrix& a, std::size_t rows, std::size_t cols);
IntMatrix submatrix(const IntMatrix& a, const SubmatrixIndex& idx);
IntMatrix select_columns(const IntMatrix& a, std::span<const std::size_t> cols);
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);

// Orders |a|^(1/j) against |b|^(1/k) exactly by comparing |a|^k with |b|^j.
std::strong_ordering root_power_compare(const BigInt& a, unsigned long j, const BigInt& b, unsigned long k);

// |a|^(1/k) in floating point, for reporting only.
double root_value(const BigInt& a, unsigned long k);

}  // namespace disclab
