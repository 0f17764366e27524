#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace disclab::detail {

// Splits [0, count) into at most `threads` contiguous chunks and runs
// fn(chunk, begin, end) for each. Results must be combined by the caller with an
// order-independent reduction; chunk c always covers the same range for a
// given (count, threads), and callers reduce chunks in index order.
template <class Fn>
void parallel_chunks(std::uint64_t count, unsigned threads, Fn&& fn) {
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads ? threads : 1, count));
  auto range = [&](std::uint64_t c) {
    const std::uint64_t begin = count * c / chunks;
    const std::uint64_t end = count * (c + 1) / chunks;
    return std::pair{begin, end};
  };
  if (chunks == 1) {
    fn(std::uint64_t{0}, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> pool;
    pool.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
      pool.emplace_back([&, c] {
        try {
          auto [b, e] = range(c);
          fn(c, b, e);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline std::uint64_t chunk_count(std::uint64_t count, unsigned threads) {
  return std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads ? threads : 1, count));
}

}  // namespace disclab::detail
