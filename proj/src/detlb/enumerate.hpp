#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "common/combinations.hpp"
#include "common/parallel.hpp"
#include "disclab/bigint.hpp"
#include "disclab/exact.hpp"

namespace disclab::detail {

// Determinants of the k x k submatrices of a fixed matrix, using an int64
// Bareiss when entries fit and the exact BigInt path otherwise.
class SquareDets {
 public:
  explicit SquareDets(const IntMatrix& a) : a_(a), small_(a.to_int64()) {}

  BigInt det(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (small_) {
      buf_.resize(k * k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) buf_[i * k + j] = (*small_)[rows[i] * a_.cols() + cols[j]];
      if (auto d = det_int64(buf_, k)) return BigInt(static_cast<long>(*d));
    }
    return det_exact(submatrix(a_, SubmatrixIndex{rows, cols}));
  }

 private:
  const IntMatrix& a_;
  std::optional<std::vector<std::int64_t>> small_;
  std::vector<std::int64_t> buf_;
};

// Visits positions [0, count) of the order-k enumeration (row subset major,
// column subset minor, both lexicographic) in parallel chunks. fn(chunk, rows,
// cols, dets) returns false to stop its chunk early.
template <class Fn>
void for_each_square(const IntMatrix& a, std::size_t k, std::uint64_t count, unsigned threads, Fn&& fn) {
  const std::size_t m = a.rows(), n = a.cols();
  const std::uint64_t col_sets = binomial_saturating(n, k);
  parallel_chunks(count, threads, [&](std::uint64_t chunk, std::uint64_t lo, std::uint64_t hi) {
    if (lo >= hi) return;
    SquareDets dets(a);
    auto rows = unrank_combination(m, k, lo / col_sets);
    auto cols = unrank_combination(n, k, lo % col_sets);
    for (std::uint64_t pos = lo; pos < hi; ++pos) {
      if (!fn(chunk, rows, cols, dets)) return;
      if (!next_combination(cols, n)) {
        cols = first_combination(k);
        next_combination(rows, m);
      }
    }
  });
}

}  // namespace disclab::detail
