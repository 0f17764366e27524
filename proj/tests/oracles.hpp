#pragma once

// Independent reference computations used only by the tests. They share no
// code with the library beyond IntMatrix/BigInt storage.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "disclab/bigint.hpp"
#include "disclab/int_matrix.hpp"

namespace oracle {

using disclab::BigInt;
using disclab::IntMatrix;

// Leibniz expansion over all permutations.
inline BigInt leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    BigInt term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    if (inversions % 2) total -= term; else total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline double leibniz_det_double(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    double term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline IntMatrix random_matrix(std::mt19937_64& g, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<BigInt> v(rows * cols);
  for (auto& x : v) x = d(g);
  return IntMatrix(rows, cols, std::move(v));
}

// Row products for colouring index `mask` over all n columns (bit j set means -1).
inline std::vector<BigInt> products(const IntMatrix& a, std::uint64_t mask) {
  std::vector<BigInt> r(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if ((mask >> j) & 1u) r[i] -= a(i, j); else r[i] += a(i, j);
    }
  return r;
}

inline BigInt inf_of(const std::vector<BigInt>& r) {
  BigInt b = 0;
  for (const auto& v : r) if (abs(v) > b) b = abs(v);
  return b;
}

inline BigInt l1_of(const std::vector<BigInt>& r) {
  BigInt b = 0;
  for (const auto& v : r) b += abs(v);
  return b;
}

// Minimum over every colouring, without using the x -> -x symmetry.
inline BigInt brute_disc_inf(const IntMatrix& a) {
  BigInt best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.cols()); ++mask) {
    const auto v = inf_of(products(a, mask));
    if (best < 0 || v < best) best = v;
  }
  return best;
}

inline BigInt brute_disc_l1(const IntMatrix& a) {
  BigInt best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.cols()); ++mask) {
    const auto v = l1_of(products(a, mask));
    if (best < 0 || v < best) best = v;
  }
  return best;
}

inline double brute_disc_p(const IntMatrix& a, double p) {
  double best = INFINITY;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.cols()); ++mask) {
    double s = 0;
    for (const auto& v : products(a, mask)) s += std::pow(std::fabs(v.get_d()), p);
    best = std::min(best, std::pow(s / static_cast<double>(a.rows()), 1.0 / p));
  }
  return best;
}

inline IntMatrix columns(const IntMatrix& a, const std::vector<std::size_t>& cols) {
  std::vector<BigInt> v;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (auto c : cols) v.push_back(a(i, c));
  return IntMatrix(a.rows(), cols.size(), std::move(v));
}

inline BigInt brute_herdisc(const IntMatrix& a) {
  BigInt best = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << a.cols()); ++s) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < a.cols(); ++j) if ((s >> j) & 1u) cols.push_back(j);
    const auto v = brute_disc_inf(columns(a, cols));
    if (v > best) best = v;
  }
  return best;
}

// max over all square submatrices of |det|^(1/k), in floating point.
inline double brute_detlb(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  double best = 0;
  for (std::uint64_t rs = 1; rs < (std::uint64_t{1} << m); ++rs) {
    for (std::uint64_t cs = 1; cs < (std::uint64_t{1} << n); ++cs) {
      if (__builtin_popcountll(rs) != __builtin_popcountll(cs)) continue;
      std::vector<std::size_t> r, c;
      for (std::size_t i = 0; i < m; ++i) if ((rs >> i) & 1u) r.push_back(i);
      for (std::size_t j = 0; j < n; ++j) if ((cs >> j) & 1u) c.push_back(j);
      std::vector<std::vector<double>> sub(r.size(), std::vector<double>(c.size()));
      for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) sub[i][j] = a(r[i], c[j]).get_d();
      const double d = std::fabs(leibniz_det_double(sub));
      best = std::max(best, std::pow(d, 1.0 / static_cast<double>(r.size())));
    }
  }
  return best;
}

// Largest column set on which the rows realize every 0/1 pattern.
inline std::size_t brute_vc(const IntMatrix& a) {
  std::size_t best = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << a.cols()); ++s) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < a.cols(); ++j) if ((s >> j) & 1u) cols.push_back(j);
    std::vector<bool> seen(std::size_t{1} << cols.size(), false);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::size_t p = 0;
      for (std::size_t t = 0; t < cols.size(); ++t) if (a(i, cols[t]) != 0) p |= std::size_t{1} << t;
      seen[p] = true;
    }
    if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) best = std::max(best, cols.size());
  }
  return best;
}

}  // namespace oracle
