#include <gmpxx.h>

#include <cmath>
#include <set>

#include "common/combinations.hpp"
#include "common/parallel.hpp"
#include "disclab/error.hpp"
#include "disclab/kernels/kernels.hpp"
#include "disclab/rng.hpp"
#include "disclab/vollb.hpp"

namespace disclab {

namespace {

constexpr std::uint64_t kBlock = 8192;

void check_subset(const IntMatrix& a, const std::vector<std::size_t>& s) {
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "subset must be nonempty");
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (s[t] >= a.cols() || (t > 0 && s[t] <= s[t - 1]))
      throw Error(ErrorKind::IndexOutOfRange, "subset must be sorted, distinct and within the columns");
  }
}

}  // namespace

BoundingBox bounding_box(const IntMatrix& a, const std::vector<std::size_t>& subset) {
  check_subset(a, subset);
  const std::size_t k = subset.size();
  // Greedy row selection: keep a row when it is independent of the rows kept
  // so far (exact elimination against a reduced basis).
  std::vector<std::vector<mpq_class>> basis;
  std::vector<std::size_t> pivots;
  BoundingBox box;
  box.subset = subset;
  for (std::size_t i = 0; i < a.rows() && box.basis_rows.size() < k; ++i) {
    std::vector<mpq_class> v(k);
    for (std::size_t t = 0; t < k; ++t) v[t] = mpq_class(a(i, subset[t]));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const mpq_class f = v[pivots[b]];
      if (f == 0) continue;
      for (std::size_t t = 0; t < k; ++t) v[t] -= f * basis[b][t];
    }
    std::size_t p = k;
    for (std::size_t t = 0; t < k; ++t)
      if (v[t] != 0) {
        p = t;
        break;
      }
    if (p == k) continue;
    const mpq_class lead = v[p];
    for (auto& x : v) x /= lead;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const mpq_class f = basis[b][p];
      if (f == 0) continue;
      for (std::size_t t = 0; t < k; ++t) basis[b][t] -= f * v[t];
    }
    basis.push_back(std::move(v));
    pivots.push_back(p);
    box.basis_rows.push_back(i);
  }
  if (box.basis_rows.size() < k) {
    throw Error(ErrorKind::RankDeficient, "columns of the subset have rank " + std::to_string(box.basis_rows.size()) +
                                              " < " + std::to_string(k));
  }

  // Gauss-Jordan inverse of B, tracking det B.
  std::vector<std::vector<mpq_class>> m(k, std::vector<mpq_class>(2 * k));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t t = 0; t < k; ++t) m[r][t] = mpq_class(a(box.basis_rows[r], subset[t]));
    m[r][k + r] = 1;
  }
  mpq_class det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    const mpq_class piv = m[c][c];
    det *= piv;
    for (auto& x : m[c]) x /= piv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (std::size_t t = 0; t < 2 * k; ++t) m[r][t] -= f * m[c][t];
    }
  }
  box.det = BigInt(det.get_num());
  box.radii.reserve(k);
  for (std::size_t r = 0; r < k; ++r) {
    mpq_class s = 0;
    for (std::size_t t = 0; t < k; ++t) s += abs(m[r][k + t]);
    box.radii.emplace_back(BigInt(s.get_num()), BigInt(s.get_den()));
  }
  return box;
}

VolumeEstimate estimate_volume(const IntMatrix& a, const std::vector<std::size_t>& subset, std::uint64_t samples,
                               std::uint64_t seed, const Limits& limits) {
  if (samples == 0) throw Error(ErrorKind::InvalidArgument, "samples must be at least 1");
  const BoundingBox box = bounding_box(a, subset);
  const std::size_t k = subset.size();

  // Distinct nonzero rows of A_S, stored column-major as doubles.
  std::set<std::vector<BigInt>> uniq;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<BigInt> r(k);
    bool nonzero = false;
    for (std::size_t t = 0; t < k; ++t) {
      r[t] = a(i, subset[t]);
      nonzero = nonzero || r[t] != 0;
    }
    if (nonzero) uniq.insert(std::move(r));
  }
  const std::size_t m = uniq.size();
  std::vector<double> cols(k * m);
  {
    std::size_t i = 0;
    for (const auto& r : uniq) {
      for (std::size_t t = 0; t < k; ++t) cols[t * m + i] = r[t].get_d();
      ++i;
    }
  }
  std::vector<double> radius(k);
  double box_volume = 1.0;
  for (std::size_t t = 0; t < k; ++t) {
    radius[t] = box.radii[t].to_double();
    box_volume *= 2.0 * radius[t];
  }

  std::vector<std::uint64_t> key{seed, static_cast<std::uint64_t>(k)};
  key.insert(key.end(), subset.begin(), subset.end());
  key.push_back(0);  // block index slot

  const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<std::uint64_t> accepted(detail::chunk_count(blocks, limits.threads), 0);
  detail::parallel_chunks(blocks, limits.threads, [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
    const auto& kt = kernels::active();
    std::vector<double> acc(m);
    std::vector<std::uint64_t> my_key = key;
    std::uint64_t hits = 0;
    for (std::uint64_t b = lo; b < hi; ++b) {
      my_key.back() = b;
      KeyedRng rng(my_key);
      const std::uint64_t count = std::min(kBlock, samples - b * kBlock);
      for (std::uint64_t s = 0; s < count; ++s) {
        std::fill(acc.begin(), acc.end(), 0.0);
        for (std::size_t t = 0; t < k; ++t) kt.f64_axpy(acc.data(), cols.data() + t * m, rng.uniform(-radius[t], radius[t]), m);
        if (kt.f64_maxabs(acc.data(), m) <= 1.0) ++hits;
      }
    }
    accepted[c] = hits;
  });

  VolumeEstimate est;
  est.subset = subset;
  est.k = k;
  est.samples = samples;
  est.seed = seed;
  est.box_volume = box_volume;
  for (auto h : accepted) est.accepted += h;
  const double p = static_cast<double>(est.accepted) / static_cast<double>(samples);
  est.volume = p * box_volume;
  est.std_error = box_volume * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  est.inv_root = est.accepted > 0 ? std::pow(est.volume, -1.0 / static_cast<double>(k)) : 0.0;
  return est;
}

VolLbResult vollb_estimate(const IntMatrix& a, std::size_t max_k, std::uint64_t samples_per_subset, std::uint64_t seed,
                           const Limits& limits) {
  if (max_k == 0) throw Error(ErrorKind::InvalidArgument, "max_k must be at least 1");
  const std::size_t n = a.cols();
  const std::size_t kmax = std::min(max_k, n);
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= kmax; ++k) total = std::min<std::uint64_t>(UINT64_MAX - 1, total + detail::binomial_saturating(n, k));
  if (total > limits.subset_budget) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(total) + " subsets exceed the budget of " +
                                               std::to_string(limits.subset_budget));
  }

  VolLbResult out;
  for (std::size_t k = 1; k <= kmax; ++k) {
    auto s = detail::first_combination(k);
    do {
      VolumeEstimate est;
      try {
        est = estimate_volume(a, s, samples_per_subset, seed, limits);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::RankDeficient) throw;
        est.subset = s;
        est.k = k;
        est.bounded = false;
        est.samples = 0;
        est.seed = seed;
      }
      if (est.inv_root > out.value) {
        out.value = est.inv_root;
        out.argmax = s;
      }
      out.table.push_back(std::move(est));
    } while (detail::next_combination(s, n));
  }
  return out;
}

}  // namespace disclab
