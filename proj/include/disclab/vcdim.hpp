#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "disclab/bigint.hpp"
#include "disclab/int_matrix.hpp"
#include "disclab/limits.hpp"

namespace disclab {

struct ShatterWitness {
  std::vector<std::size_t> cols;
  // pattern_rows[p] is the first row whose restriction to cols equals p, where
  // bit t of p is the entry in column cols[t].
  std::vector<std::size_t> pattern_rows;
};

// Throws NotBinary, or SearchSpaceTooLarge when |cols| exceeds the VC cap.
std::optional<ShatterWitness> is_shattered(const IntMatrix& a, const std::vector<std::size_t>& cols,
                                           const Limits& limits = {});

struct VcResult {
  std::size_t d = 0;
  ShatterWitness witness;  // lexicographically first shattered set of size d
};

VcResult vc_dimension(const IntMatrix& a, const Limits& limits = {});

struct RandomColoringStats {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;
  BigInt max;
  double stddev = 0.0;  // sample standard deviation, 0 for a single trial
  std::optional<std::size_t> d;  // VC dimension when the input is binary
  std::vector<std::size_t> vc_cols;
  std::optional<double> normalized_ratio;  // mean / sqrt(n d) when d >= 1
  bool constant_input = false;
};

// Statistics of ||A x||_inf over i.i.d. uniform colourings; trial t draws from
// the stream keyed by (seed, t).
RandomColoringStats random_coloring_stats(const IntMatrix& a, std::uint64_t trials, std::uint64_t seed,
                                          const Limits& limits = {});

}  // namespace disclab
