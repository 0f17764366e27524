#include <cstdint>
#include <vector>

#include "constructions/size_check.hpp"
#include "disclab/constructions.hpp"
#include "disclab/exact.hpp"

namespace disclab {

namespace {

// haar(k) as a flat int8 grid, unfolded level by level from A_0 = [1].
std::vector<std::int8_t> haar_grid(unsigned k) {
  std::vector<std::int8_t> a{1};
  std::size_t s = 1;
  for (unsigned level = 0; level < k; ++level) {
    const std::size_t t = 2 * s;
    std::vector<std::int8_t> b(t * t, 0);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        b[i * t + j] = a[i * s + j];
        b[(i + s) * t + j] = a[i * s + j];
      }
      b[i * t + s + i] = 1;
      b[(i + s) * t + s + i] = -1;
    }
    a = std::move(b);
    s = t;
  }
  return a;
}

IntMatrix from_grid(std::size_t rows, std::size_t cols, const std::vector<std::int8_t>& g) {
  std::vector<BigInt> data(g.begin(), g.end());
  return IntMatrix(rows, cols, std::move(data));
}

void check_haar(unsigned k, const Limits& limits, unsigned extra_row_bits = 0) {
  const auto side = detail::pow2(k);
  detail::check_entries(side * detail::pow2(extra_row_bits), side, limits, "haar matrix");
}

}  // namespace

IntMatrix haar(unsigned k, const Limits& limits) {
  check_haar(k, limits);
  const std::size_t s = std::size_t{1} << k;
  return from_grid(s, s, haar_grid(k));
}

IntMatrix haar_tilde(unsigned k, const Limits& limits) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "haar_tilde(0) would have no columns");
  check_haar(k, limits);
  const std::size_t s = std::size_t{1} << k;
  const auto g = haar_grid(k);
  std::vector<BigInt> data;
  data.reserve(s * (s - 1));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 1; j < s; ++j) data.emplace_back(g[i * s + j]);
  return IntMatrix(s, s - 1, std::move(data));
}

IntMatrix haar_pos(unsigned k, const Limits& limits) {
  check_haar(k, limits);
  const std::size_t s = std::size_t{1} << k;
  auto g = haar_grid(k);
  for (auto& v : g) v = v > 0 ? 1 : 0;
  return from_grid(s, s, g);
}

IntMatrix haar_neg(unsigned k, const Limits& limits) {
  check_haar(k, limits);
  const std::size_t s = std::size_t{1} << k;
  auto g = haar_grid(k);
  for (auto& v : g) v = v < 0 ? 1 : 0;
  return from_grid(s, s, g);
}

IntMatrix haar_pm(unsigned k, const Limits& limits) {
  check_haar(k, limits, 1);
  return vstack(haar_pos(k, limits), haar_neg(k, limits));
}

}  // namespace disclab
