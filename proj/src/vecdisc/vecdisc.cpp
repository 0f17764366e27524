#include <cmath>

#include "disclab/error.hpp"
#include "disclab/rng.hpp"
#include "disclab/vecdisc.hpp"

namespace disclab {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void validate(const VectorAssignment& va, std::size_t columns) {
  if (va.dim == 0) throw Error(ErrorKind::InvalidArgument, "vector dimension must be at least 1");
  if (va.vectors.size() != columns) {
    throw Error(ErrorKind::DimensionMismatch, std::to_string(va.vectors.size()) + " vectors for " +
                                                  std::to_string(columns) + " columns");
  }
  for (std::size_t j = 0; j < va.vectors.size(); ++j) {
    const auto& v = va.vectors[j];
    if (v.size() != va.dim) throw Error(ErrorKind::DimensionMismatch, "vector " + std::to_string(j) + " has wrong length");
    const double norm = std::sqrt(dot(v, v));
    if (!(std::fabs(norm - 1.0) <= 1e-9)) {
      throw Error(ErrorKind::NonUnitVector, "vector " + std::to_string(j) + " has norm " + std::to_string(norm));
    }
  }
}

VectorAssignment random_unit_assignment(std::size_t columns, std::size_t dim, std::uint64_t seed, std::uint64_t index) {
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "vector dimension must be at least 1");
  VectorAssignment va;
  va.dim = dim;
  va.vectors.resize(columns);
  KeyedRng rng{seed, index};
  for (auto& v : va.vectors) {
    double norm = 0.0;
    do {
      v.assign(dim, 0.0);
      for (auto& c : v) c = rng.normal();
      norm = std::sqrt(dot(v, v));
    } while (norm < 1e-12);
    for (auto& c : v) c /= norm;
  }
  return va;
}

PathCertificate greedy_heavy_path(const HaarTree& tree, const VectorAssignment& va) {
  validate(va, tree.columns());
  PathCertificate cert;
  const auto& root = tree.node(tree.root());
  cert.accumulated = va.vectors[root.column];
  cert.path.push_back({root.column, +1});
  double before_last = 0.0;
  HaarTree::Child at = root.left;
  while (!at.is_leaf) {
    const auto& nd = tree.node(at.id);
    const auto& v = va.vectors[nd.column];
    before_last = dot(cert.accumulated, cert.accumulated);
    const bool left = dot(cert.accumulated, v) >= 0.0 || !nd.right;
    const double s = left ? 1.0 : -1.0;
    for (std::size_t i = 0; i < va.dim; ++i) cert.accumulated[i] += s * v[i];
    cert.path.push_back({nd.column, left ? +1 : -1});
    at = left ? nd.left : *nd.right;
  }
  cert.row_index = tree.leaf_row(at.id);
  cert.sq_norm = dot(cert.accumulated, cert.accumulated);
  cert.partial_sq_norm = before_last;
  return cert;
}

double vecdisc_row_norm(const IntMatrix& a, const VectorAssignment& va, std::size_t row) {
  validate(va, a.cols());
  if (row >= a.rows()) throw Error(ErrorKind::IndexOutOfRange, "row " + std::to_string(row) + " out of range");
  std::vector<double> acc(va.dim, 0.0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const double c = a(row, j).get_d();
    if (c == 0.0) continue;
    for (std::size_t i = 0; i < va.dim; ++i) acc[i] += c * va.vectors[j][i];
  }
  return std::sqrt(dot(acc, acc));
}

}  // namespace disclab
