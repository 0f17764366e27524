#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "disclab/int_matrix.hpp"
#include "disclab/limits.hpp"

namespace disclab {

// The rooted tree behind haar(k): an extra root r whose only (left) child is
// the root of a depth-k perfect binary tree. Every non-leaf node is a column,
// every root-to-leaf path a row; a left edge out of node t puts +1 in column t,
// a right edge puts -1.
//
// Column layout follows the recursive constructor: r is column 0, and the
// internal nodes on level d (d = 1..k) are columns 2^(d-1) .. 2^d - 1. Node
// index i on level d has children i (left) and i + 2^(d-1) (right) on level
// d + 1; level k + 1 indices are the row numbers of the leaves.
class HaarTree {
 public:
  struct Child {
    bool is_leaf = false;
    std::size_t id = 0;  // node id, or row index for a leaf
  };
  struct Node {
    std::size_t column = 0;
    Child left;
    std::optional<Child> right;  // absent only for r
  };
  struct Step {
    std::size_t column;
    int sign;  // +1 left edge, -1 right edge
  };

  HaarTree(unsigned depth, std::vector<Node> nodes, std::vector<std::size_t> leaf_rows);

  unsigned depth() const noexcept { return depth_; }
  std::size_t root() const noexcept { return 0; }
  std::size_t columns() const noexcept { return nodes_.size(); }
  std::size_t leaves() const noexcept { return leaf_rows_.size(); }
  const Node& node(std::size_t id) const { return nodes_.at(id); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  // leaf id -> row index
  std::size_t leaf_row(std::size_t leaf) const { return leaf_rows_.at(leaf); }

  // Signed columns visited on the root-to-leaf path ending at `row`.
  std::vector<Step> path_to_row(std::size_t row) const;

 private:
  unsigned depth_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> leaf_rows_;
  std::vector<std::vector<Step>> row_paths_;
};

HaarTree haar_tree(unsigned k, const Limits& limits = {});

// Rebuilds the matrix by walking every root-to-leaf path.
IntMatrix matrix_from_tree(const HaarTree& tree);

}  // namespace disclab
