#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "disclab/bigint.hpp"
#include "disclab/int_matrix.hpp"
#include "disclab/limits.hpp"

namespace disclab {

// Axis box containing {x in R^S : ||A_S x||_inf <= 1}.
struct BoundingBox {
  std::vector<std::size_t> subset;
  std::vector<std::size_t> basis_rows;  // invertible k x k block B of A_S
  BigInt det;                           // det B
  std::vector<BigRational> radii;       // sum_j |B^-1 (i, j)|
};

// Throws RankDeficient when the columns in S are linearly dependent.
BoundingBox bounding_box(const IntMatrix& a, const std::vector<std::size_t>& subset);

struct VolumeEstimate {
  std::vector<std::size_t> subset;
  std::size_t k = 0;
  bool bounded = true;  // false for rank-deficient subsets
  double volume = 0.0;
  double std_error = 0.0;
  double inv_root = 0.0;  // volume^(-1/k), 0 when unbounded or nothing accepted
  double box_volume = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t accepted = 0;
  std::uint64_t seed = 0;
};

// Rejection sampling inside bounding_box(a, subset).
VolumeEstimate estimate_volume(const IntMatrix& a, const std::vector<std::size_t>& subset, std::uint64_t samples,
                               std::uint64_t seed, const Limits& limits = {});

struct VolLbResult {
  double value = 0.0;
  std::vector<std::size_t> argmax;
  std::vector<VolumeEstimate> table;
};

// Maximum of volume^(-1/k) over column subsets with |S| <= max_k.
VolLbResult vollb_estimate(const IntMatrix& a, std::size_t max_k = 3, std::uint64_t samples_per_subset = 100'000,
                           std::uint64_t seed = 0, const Limits& limits = {});

}  // namespace disclab
