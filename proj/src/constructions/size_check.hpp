#pragma once

#include <cstdint>
#include <string>

#include "disclab/error.hpp"
#include "disclab/limits.hpp"

namespace disclab::detail {

inline void check_entries(unsigned __int128 rows, unsigned __int128 cols, const Limits& limits, const char* what) {
  const bool too_big = rows > limits.max_entries || cols > limits.max_entries || rows * cols > limits.max_entries;
  if (rows == 0 || cols == 0 || too_big) {
    throw Error(ErrorKind::SizeLimit, std::string(what) + " exceeds the configured cap of " +
                                          std::to_string(limits.max_entries) + " entries");
  }
}

inline unsigned __int128 pow2(unsigned e) {
  return e >= 127 ? ~static_cast<unsigned __int128>(0) : static_cast<unsigned __int128>(1) << e;
}

}  // namespace disclab::detail
