#include <cmath>
#include <utility>

#include "disclab/error.hpp"
#include "disclab/exact.hpp"

namespace disclab {

namespace {

// Locates a nonzero pivot in the trailing block; prefers the smallest magnitude
// to keep intermediate minors compact when the block is not uniform.
template <class At, class Abs>
bool find_pivot(std::size_t n, std::size_t k, At at, Abs abs_less, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  for (std::size_t i = k; i < n; ++i) {
    for (std::size_t j = k; j < n; ++j) {
      if (at(i, j) == 0) continue;
      if (!found || abs_less(at(i, j), at(pr, pc))) {
        pr = i;
        pc = j;
        found = true;
      }
    }
  }
  return found;
}

}  // namespace

BigInt det_exact(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<BigInt> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };

  int sign = 1;
  BigInt prev = 1;
  BigInt t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pr = k, pc = k;
    auto abs_less = [](const BigInt& x, const BigInt& y) { return cmpabs(x, y) < 0; };
    if (!find_pivot(n, k, at, abs_less, pr, pc)) return 0;
    if (pr != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(pr, j), at(k, j));
      sign = -sign;
    }
    if (pc != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, pc), at(i, k));
      sign = -sign;
    }
    const BigInt& pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // a_ij <- (a_ij * a_kk - a_ik * a_kj) / prev, exact by Sylvester's identity
        t = at(i, j) * pivot;
        t -= at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = pivot;
  }
  BigInt d = at(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

namespace {

BigInt cofactor_rec(const std::vector<BigInt>& a, std::size_t n) {
  if (n == 1) return a[0];
  BigInt total = 0;
  std::vector<BigInt> minor((n - 1) * (n - 1));
  for (std::size_t c = 0; c < n; ++c) {
    if (a[c] == 0) continue;
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t out = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) minor[(i - 1) * (n - 1) + out++] = a[i * n + j];
    }
    BigInt term = a[c] * cofactor_rec(minor, n - 1);
    if (c % 2 == 0) total += term; else total -= term;
  }
  return total;
}

}  // namespace

BigInt det_cofactor(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  if (m.rows() > 8) throw Error(ErrorKind::InvalidArgument, "cofactor expansion limited to order 8");
  return cofactor_rec(std::vector<BigInt>(m.entries().begin(), m.entries().end()), m.rows());
}

std::optional<std::int64_t> det_int64(std::span<const std::int64_t> square, std::size_t n) {
  if (n == 0 || square.size() != n * n) throw Error(ErrorKind::NotSquare, "det_int64 expects an n x n buffer");

  // Every Bareiss intermediate is a minor of the input, so it is bounded by the
  // product of max(1, row norm) over all rows.
  long double log2_bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long double sq = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const long double v = static_cast<long double>(square[i * n + j]);
      sq += v * v;
    }
    if (sq > 1) log2_bound += 0.5L * std::log2(sq);
  }
  if (log2_bound >= 61.5L) return std::nullopt;

  using i128 = __int128;
  std::int64_t buf[64];
  std::vector<std::int64_t> heap;
  std::int64_t* a = buf;
  if (n * n > 64) {
    heap.assign(square.begin(), square.end());
    a = heap.data();
  } else {
    std::copy(square.begin(), square.end(), buf);
  }

  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pr = k, pc = k;
    auto at = [&](std::size_t i, std::size_t j) { return a[i * n + j]; };
    auto abs_less = [](std::int64_t x, std::int64_t y) { return (x < 0 ? -x : x) < (y < 0 ? -y : y); };
    if (!find_pivot(n, k, at, abs_less, pr, pc)) return 0;
    if (pr != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[pr * n + j], a[k * n + j]);
      sign = -sign;
    }
    if (pc != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i * n + pc], a[i * n + k]);
      sign = -sign;
    }
    const std::int64_t pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::int64_t aik = a[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        const i128 t = static_cast<i128>(a[i * n + j]) * pivot - static_cast<i128>(aik) * a[k * n + j];
        a[i * n + j] = static_cast<std::int64_t>(t / prev);
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  const std::int64_t d = a[(n - 1) * n + (n - 1)];
  return sign < 0 ? -d : d;
}

}  // namespace disclab
