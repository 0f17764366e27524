#include <cmath>
#include <string>

#include "disclab/error.hpp"
#include "disclab/exact.hpp"

namespace disclab {

void validate(const SubmatrixIndex& idx, const IntMatrix& parent) {
  auto check = [](const std::vector<std::size_t>& ids, std::size_t bound, const char* what) {
    if (ids.empty()) throw Error(ErrorKind::InvalidArgument, std::string(what) + " index list is empty");
    for (std::size_t t = 0; t < ids.size(); ++t) {
      if (ids[t] >= bound) {
        throw Error(ErrorKind::IndexOutOfRange,
                    std::string(what) + " index " + std::to_string(ids[t]) + " >= " + std::to_string(bound));
      }
      if (t > 0 && ids[t] <= ids[t - 1]) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " indices must be sorted and distinct");
      }
    }
  };
  check(idx.rows, parent.rows(), "row");
  check(idx.cols, parent.cols(), "column");
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const BigInt& s = a(i, j);
      if (s == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) out(i * b.rows() + p, j * b.cols() + q) = s * b(p, q);
    }
  }
  return out;
}

IntMatrix pad_zeros(const IntMatrix& a, std::size_t rows, std::size_t cols) {
  if (rows < a.rows() || cols < a.cols()) {
    throw Error(ErrorKind::TargetSmallerThanSource,
                "cannot pad " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " to " +
                    std::to_string(rows) + "x" + std::to_string(cols));
  }
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

IntMatrix submatrix(const IntMatrix& a, const SubmatrixIndex& idx) {
  validate(idx, a);
  IntMatrix out(idx.rows.size(), idx.cols.size());
  for (std::size_t i = 0; i < idx.rows.size(); ++i)
    for (std::size_t j = 0; j < idx.cols.size(); ++j) out(i, j) = a(idx.rows[i], idx.cols[j]);
  return out;
}

IntMatrix select_columns(const IntMatrix& a, std::span<const std::size_t> cols) {
  if (cols.empty()) throw Error(ErrorKind::InvalidArgument, "empty column selection");
  IntMatrix out(a.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= a.cols()) throw Error(ErrorKind::IndexOutOfRange, "column index out of range");
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, cols[j]);
  }
  return out;
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack column counts differ");
  std::vector<BigInt> data(top.entries().begin(), top.entries().end());
  data.insert(data.end(), bottom.entries().begin(), bottom.entries().end());
  return IntMatrix(top.rows() + bottom.rows(), top.cols(), std::move(data));
}

std::strong_ordering root_power_compare(const BigInt& a, unsigned long j, const BigInt& b, unsigned long k) {
  if (j == 0 || k == 0) throw Error(ErrorKind::InvalidArgument, "root orders must be positive");
  BigInt lhs, rhs;
  BigInt abs_a = abs(a), abs_b = abs(b);
  mpz_pow_ui(lhs.get_mpz_t(), abs_a.get_mpz_t(), k);
  mpz_pow_ui(rhs.get_mpz_t(), abs_b.get_mpz_t(), j);
  const int c = cmp(lhs, rhs);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

double root_value(const BigInt& a, unsigned long k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "root order must be positive");
  if (a == 0) return 0.0;
  long exp2 = 0;
  const double mant = std::fabs(mpz_get_d_2exp(&exp2, a.get_mpz_t()));
  // |a| = mant * 2^exp2 with mant in [0.5, 1)
  const double log2_abs = std::log2(mant) + static_cast<double>(exp2);
  return std::exp2(log2_abs / static_cast<double>(k));
}

}  // namespace disclab
