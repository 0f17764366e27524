#include "constructions/size_check.hpp"
#include "disclab/haar_tree.hpp"

namespace disclab {

HaarTree::HaarTree(unsigned depth, std::vector<Node> nodes, std::vector<std::size_t> leaf_rows)
    : depth_(depth), nodes_(std::move(nodes)), leaf_rows_(std::move(leaf_rows)), row_paths_(leaf_rows_.size()) {
  std::vector<Step> path;
  auto walk = [&](auto&& self, const Child& c) -> void {
    if (c.is_leaf) {
      row_paths_.at(leaf_rows_.at(c.id)) = path;
      return;
    }
    const Node& nd = nodes_.at(c.id);
    path.push_back({nd.column, +1});
    self(self, nd.left);
    path.pop_back();
    if (nd.right) {
      path.push_back({nd.column, -1});
      self(self, *nd.right);
      path.pop_back();
    }
  };
  walk(walk, Child{false, 0});
}

std::vector<HaarTree::Step> HaarTree::path_to_row(std::size_t row) const { return row_paths_.at(row); }

HaarTree haar_tree(unsigned k, const Limits& limits) {
  detail::check_entries(detail::pow2(k), detail::pow2(k), limits, "haar tree");
  const std::size_t n = std::size_t{1} << k;
  std::vector<HaarTree::Node> nodes(n);
  nodes[0].column = 0;
  nodes[0].left = k == 0 ? HaarTree::Child{true, 0} : HaarTree::Child{false, 1};
  for (unsigned d = 1; d <= k; ++d) {
    const std::size_t width = std::size_t{1} << (d - 1);
    for (std::size_t i = 0; i < width; ++i) {
      auto& nd = nodes[width + i];
      nd.column = width + i;
      if (d < k) {
        nd.left = {false, 2 * width + i};
        nd.right = HaarTree::Child{false, 2 * width + i + width};
      } else {
        nd.left = {true, i};
        nd.right = HaarTree::Child{true, i + width};
      }
    }
  }
  std::vector<std::size_t> leaf_rows(n);
  for (std::size_t i = 0; i < n; ++i) leaf_rows[i] = i;
  return HaarTree(k, std::move(nodes), std::move(leaf_rows));
}

IntMatrix matrix_from_tree(const HaarTree& tree) {
  IntMatrix m(tree.leaves(), tree.columns());
  for (std::size_t row = 0; row < tree.leaves(); ++row)
    for (const auto& step : tree.path_to_row(row)) m(row, step.column) = step.sign;
  return m;
}

}  // namespace disclab
