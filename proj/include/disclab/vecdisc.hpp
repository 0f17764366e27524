#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "disclab/haar_tree.hpp"
#include "disclab/int_matrix.hpp"

namespace disclab {

// One unit vector of length dim per column.
struct VectorAssignment {
  std::size_t dim = 0;
  std::vector<std::vector<double>> vectors;
};

// Throws DimensionMismatch or NonUnitVector (norm off by more than 1e-9).
void validate(const VectorAssignment& va, std::size_t columns);

// Gaussian directions normalized to unit length, keyed by (seed, index).
VectorAssignment random_unit_assignment(std::size_t columns, std::size_t dim, std::uint64_t seed,
                                        std::uint64_t index = 0);

struct PathCertificate {
  std::size_t row_index = 0;
  std::vector<double> accumulated;  // signed sum over every path column
  double sq_norm = 0.0;             // ||accumulated||^2
  double partial_sq_norm = 0.0;     // same, without the last path column
  std::vector<HaarTree::Step> path;
};

// Walks from r, at node t taking the left edge iff <running sum, v_t> >= 0.
PathCertificate greedy_heavy_path(const HaarTree& tree, const VectorAssignment& va);

// || sum_j A[row, j] v_j ||_2
double vecdisc_row_norm(const IntMatrix& a, const VectorAssignment& va, std::size_t row);

}  // namespace disclab
