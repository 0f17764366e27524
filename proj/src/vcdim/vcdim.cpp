#include <bit>
#include <cmath>
#include <optional>
#include <set>

#include "common/combinations.hpp"
#include "common/parallel.hpp"
#include "disc/search.hpp"
#include "disclab/error.hpp"
#include "disclab/kernels/kernels.hpp"
#include "disclab/rng.hpp"
#include "disclab/vcdim.hpp"

namespace disclab {

namespace {

void require_binary(const IntMatrix& a) {
  if (!a.is_binary()) throw Error(ErrorKind::NotBinary, "matrix entries must be 0 or 1");
}

// Rows of a binary matrix as column bitmasks.
std::vector<std::uint32_t> row_masks(const IntMatrix& a) {
  std::vector<std::uint32_t> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) out[i] |= std::uint32_t{1} << j;
  return out;
}

std::optional<ShatterWitness> shatter(const std::vector<std::uint32_t>& rows, const std::vector<std::size_t>& cols,
                                      std::vector<std::int64_t>& first) {
  const std::size_t patterns = std::size_t{1} << cols.size();
  if (rows.size() < patterns) return std::nullopt;
  first.assign(patterns, -1);
  std::size_t seen = 0;
  for (std::size_t i = 0; i < rows.size() && seen < patterns; ++i) {
    std::size_t p = 0;
    for (std::size_t t = 0; t < cols.size(); ++t) p |= static_cast<std::size_t>((rows[i] >> cols[t]) & 1u) << t;
    if (first[p] < 0) {
      first[p] = static_cast<std::int64_t>(i);
      ++seen;
    }
  }
  if (seen < patterns) return std::nullopt;
  ShatterWitness w;
  w.cols = cols;
  w.pattern_rows.assign(first.begin(), first.end());
  return w;
}

void check_width(std::size_t width, const Limits& limits) {
  if (width > limits.vc_cols || width > 30) {
    throw Error(ErrorKind::SearchSpaceTooLarge, std::to_string(width) + " columns exceed the VC cap of " +
                                                    std::to_string(limits.vc_cols));
  }
}

}  // namespace

std::optional<ShatterWitness> is_shattered(const IntMatrix& a, const std::vector<std::size_t>& cols,
                                           const Limits& limits) {
  require_binary(a);
  check_width(cols.size(), limits);
  for (std::size_t t = 0; t < cols.size(); ++t) {
    if (cols[t] >= a.cols()) throw Error(ErrorKind::IndexOutOfRange, "column index out of range");
    for (std::size_t u = 0; u < t; ++u)
      if (cols[u] == cols[t]) throw Error(ErrorKind::InvalidArgument, "repeated column in shatter query");
  }
  std::vector<std::int64_t> scratch;
  return shatter(row_masks(a), cols, scratch);
}

VcResult vc_dimension(const IntMatrix& a, const Limits& limits) {
  require_binary(a);
  check_width(a.cols(), limits);
  // Duplicate rows add no patterns.
  std::vector<std::uint32_t> rows;
  {
    std::set<std::uint32_t> seen;
    for (auto r : row_masks(a))
      if (seen.insert(r).second) rows.push_back(r);
  }
  // A constant column cannot belong to a shattered set.
  std::vector<std::size_t> live;
  std::uint32_t any = 0, all = ~std::uint32_t{0};
  for (auto r : rows) {
    any |= r;
    all &= r;
  }
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (((any >> j) & 1u) && !((all >> j) & 1u)) live.push_back(j);

  // Sauer-Shelah: shattering s columns needs 2^s distinct rows.
  const std::size_t by_rows = static_cast<std::size_t>(std::bit_width(rows.size()) - 1);
  const std::size_t top = std::min(live.size(), by_rows);
  std::vector<std::int64_t> scratch;
  for (std::size_t s = top; s >= 1; --s) {
    auto pick = detail::first_combination(s);
    std::vector<std::size_t> cols(s);
    do {
      for (std::size_t t = 0; t < s; ++t) cols[t] = live[pick[t]];
      if (auto w = shatter(rows, cols, scratch)) {
        // Report row indices of the original matrix.
        const auto full = row_masks(a);
        w = shatter(full, cols, scratch);
        return {s, std::move(*w)};
      }
    } while (detail::next_combination(pick, live.size()));
  }
  return {0, ShatterWitness{{}, {0}}};
}

RandomColoringStats random_coloring_stats(const IntMatrix& a, std::uint64_t trials, std::uint64_t seed,
                                          const Limits& limits) {
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> all(n);
  for (std::size_t j = 0; j < n; ++j) all[j] = j;
  const auto dense = detail::to_dense32(a, all);

  struct Partial {
    BigInt sum = 0, sumsq = 0, max = 0;
  };
  std::vector<Partial> parts(detail::chunk_count(trials, limits.threads));
  detail::parallel_chunks(trials, limits.threads, [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
    Partial p;
    const auto& k = kernels::active();
    std::vector<std::int32_t> r(dense ? m : 0);
    std::vector<BigInt> rb(dense ? 0 : m);
    std::vector<int> x(n);
    for (std::uint64_t t = lo; t < hi; ++t) {
      KeyedRng rng{seed, t};
      for (auto& v : x) v = rng.sign();
      BigInt value;
      if (dense) {
        std::fill(r.begin(), r.end(), 0);
        for (std::size_t j = 0; j < n; ++j) k.i32_axpy(r.data(), dense->column(j), x[j], m);
        value = static_cast<long>(k.i32_maxabs(r.data(), m));
      } else {
        value = 0;
        for (std::size_t i = 0; i < m; ++i) {
          BigInt s = 0;
          for (std::size_t j = 0; j < n; ++j) s += x[j] * a(i, j);
          if (abs(s) > value) value = abs(s);
        }
      }
      p.sum += value;
      p.sumsq += value * value;
      if (value > p.max) p.max = value;
    }
    parts[c] = std::move(p);
  });

  Partial total;
  for (auto& p : parts) {
    total.sum += p.sum;
    total.sumsq += p.sumsq;
    if (p.max > total.max) total.max = p.max;
  }

  RandomColoringStats out;
  out.trials = trials;
  out.seed = seed;
  out.max = total.max;
  const BigInt t_big(static_cast<unsigned long>(trials));
  out.mean = BigRational(total.sum, t_big).to_double();
  if (trials > 1) {
    // (T sum x^2 - (sum x)^2) / (T (T - 1))
    const BigInt num = t_big * total.sumsq - total.sum * total.sum;
    const BigInt den = t_big * (t_big - 1);
    out.stddev = std::sqrt(BigRational(num, den).to_double());
  }
  out.constant_input = a.is_constant();
  if (a.is_binary() && n <= limits.vc_cols) {
    auto vc = vc_dimension(a, limits);
    out.d = vc.d;
    out.vc_cols = vc.witness.cols;
    if (vc.d >= 1) out.normalized_ratio = out.mean / std::sqrt(static_cast<double>(n) * static_cast<double>(vc.d));
  }
  return out;
}

}  // namespace disclab
