#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "disclab/disc.hpp"

namespace disclab::detail {

// Column-major int32 copy of selected columns; only built when every row's
// absolute sum stays below 2^29, so +-2 column updates cannot overflow.
struct Dense32 {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::int32_t> data;

  const std::int32_t* column(std::size_t j) const noexcept;
};

std::optional<Dense32> to_dense32(const IntMatrix& a, const std::vector<std::size_t>& cols);

DiscResult disc_search(const IntMatrix& a, const std::vector<std::size_t>& cols, Norm norm, const Limits& limits,
                       DiscStrategy strategy);

}  // namespace disclab::detail
