#include <algorithm>

#include "disclab/constructions.hpp"
#include "disclab/disc.hpp"
#include "disclab/error.hpp"
#include "disclab/rng.hpp"

namespace disclab {

AdversarialRow adversarial_row(const HaarTree& tree, const Coloring& x) {
  if (x.size() != tree.columns()) {
    throw Error(ErrorKind::DimensionMismatch, "colouring has " + std::to_string(x.size()) + " entries, tree has " +
                                                  std::to_string(tree.columns()) + " columns");
  }
  for (auto v : x.values)
    if (v != 1 && v != -1) throw Error(ErrorKind::InvalidArgument, "colouring entries must be +1 or -1");

  const int xr = x.values[tree.node(tree.root()).column];
  long sum = xr;
  HaarTree::Child at = tree.node(tree.root()).left;
  while (!at.is_leaf) {
    const auto& nd = tree.node(at.id);
    const int xt = x.values[nd.column];
    if (xt == xr || !nd.right) {
      sum += xt;
      at = nd.left;
    } else {
      sum -= xt;
      at = *nd.right;
    }
  }
  return {tree.leaf_row(at.id), BigInt(sum)};
}

AmplificationCheck verify_disc_amplification(const IntMatrix& a, unsigned N, const Limits& limits) {
  const IntMatrix big = kronecker(power_matrix(N, limits), a);
  auto lhs = std::get<BigInt>(disc_exact(big, Norm::inf(), limits).value);
  auto d1 = std::get<BigRational>(disc_exact(a, Norm::one(), limits).value);
  BigRational rhs = BigRational(BigInt(N)) * d1 / BigRational(2, 1);
  const bool holds = BigRational(lhs) >= rhs;
  return {std::move(lhs), std::move(rhs), holds};
}

namespace {

std::vector<long> sorted_products(const std::vector<std::vector<long>>& rows, const std::vector<int>& x) {
  std::vector<long> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    long s = 0;
    for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * x[j];
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MultisetCheck multiset_invariance_check(unsigned k, MultisetMode mode, const Limits& limits) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "multiset check needs k >= 1");
  if (k >= 6) throw Error(ErrorKind::SearchSpaceTooLarge, "haar_tilde(" + std::to_string(k) + ") is too wide");
  const std::size_t n = (std::size_t{1} << k) - 1;
  if (mode.exhaustive && n > limits.exhaustive_cols) {
    throw Error(ErrorKind::SearchSpaceTooLarge, "2^" + std::to_string(n) + " colourings exceed the exhaustive cap");
  }
  const IntMatrix t = haar_tilde(k, limits);
  std::vector<std::vector<long>> rows(t.rows(), std::vector<long>(n));
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = t(i, j).get_si();

  const auto reference = sorted_products(rows, std::vector<int>(n, 1));
  std::vector<int> x(n);
  auto check = [&]() { return sorted_products(rows, x) == reference; };

  std::uint64_t checked = 0;
  if (mode.exhaustive) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      for (std::size_t j = 0; j < n; ++j) x[j] = ((mask >> j) & 1u) ? -1 : 1;
      ++checked;
      if (!check()) return {false, checked};
    }
    return {true, checked};
  }
  for (std::uint64_t trial = 0; trial < mode.trials; ++trial) {
    KeyedRng rng{mode.seed, trial};
    for (auto& v : x) v = rng.sign();
    ++checked;
    if (!check()) return {false, checked};
  }
  return {true, checked};
}

PmSosCheck pm_sos_check(unsigned k, const Limits& limits) {
  auto pm = std::get<BigInt>(disc_exact(haar_pm(k, limits), Norm::inf(), limits).value);
  auto plain = std::get<BigInt>(disc_exact(haar(k, limits), Norm::inf(), limits).value);
  BigRational half = BigRational(plain, BigInt(2));
  const bool holds = BigRational(pm) >= half;
  return {std::move(pm), std::move(half), holds};
}

}  // namespace disclab
