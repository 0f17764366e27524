#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace disclab::detail {

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), std::size_t{0});
  return c;
}

// Advances a sorted k-subset of [0, n) to its lexicographic successor.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t t = k; t-- > 0;) {
    if (c[t] < n - k + t) {
      ++c[t];
      for (std::size_t u = t + 1; u < k; ++u) c[u] = c[u - 1] + 1;
      return true;
    }
  }
  return false;
}

// C(n, k) saturating at UINT64_MAX.
inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace disclab::detail

namespace disclab::detail {

inline std::uint64_t mul_saturating(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  return r > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(r);
}

// The k-subset of [0, n) with lexicographic rank r (0-based).
inline std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t r) {
  std::vector<std::size_t> c;
  c.reserve(k);
  std::size_t x = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (;;) {
      const std::uint64_t below = binomial_saturating(n - x - 1, k - i - 1);
      if (below > r) break;
      r -= below;
      ++x;
    }
    c.push_back(x++);
  }
  return c;
}

}  // namespace disclab::detail
