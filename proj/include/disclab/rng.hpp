#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace disclab {

// Deterministic stream keyed by a tuple of words, e.g. (seed, trial) or
// (seed, subset..., block). Streams with distinct keys are independent of
// scheduling, so work split across threads reproduces the sequential result.
class KeyedRng {
 public:
  KeyedRng(std::initializer_list<std::uint64_t> key) : KeyedRng(std::span<const std::uint64_t>(key.begin(), key.size())) {}

  explicit KeyedRng(std::span<const std::uint64_t> key) {
    std::vector<std::uint32_t> words;
    words.reserve(2 * key.size() + 1);
    words.push_back(static_cast<std::uint32_t>(key.size()));
    for (auto k : key) {
      words.push_back(static_cast<std::uint32_t>(k));
      words.push_back(static_cast<std::uint32_t>(k >> 32));
    }
    std::seed_seq seq(words.begin(), words.end());
    engine_.seed(seq);
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int sign() { return (next() >> 63) ? -1 : 1; }

  // Standard normal via Box-Muller on uniform01 draws.
  double normal() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace disclab
