#include <bit>
#include <optional>

#include "common/parallel.hpp"
#include "disc/search.hpp"
#include "disclab/disc.hpp"
#include "disclab/error.hpp"

namespace disclab {

namespace {

struct Candidate {
  BigInt value;
  std::vector<std::size_t> cols;
  Coloring coloring;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.cols.size() != b.cols.size()) return a.cols.size() < b.cols.size();
  return a.cols < b.cols;
}

}  // namespace

HerdiscResult herdisc_exact(const IntMatrix& a, const Limits& limits) {
  const std::size_t n = a.cols();
  if (n > limits.herdisc_cols || n > 30) {
    throw Error(ErrorKind::SearchSpaceTooLarge, std::to_string(n) + " columns exceed the hereditary cap of " +
                                                    std::to_string(limits.herdisc_cols));
  }
  Limits inner = limits;
  inner.threads = 1;
  inner.exhaustive_cols = std::max(inner.exhaustive_cols, n);

  const std::uint64_t subsets = (std::uint64_t{1} << n) - 1;
  std::vector<std::optional<Candidate>> results(detail::chunk_count(subsets, limits.threads));
  detail::parallel_chunks(subsets, limits.threads, [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
    std::optional<Candidate> best;
    std::vector<std::size_t> cols;
    for (std::uint64_t s = lo + 1; s <= hi; ++s) {
      cols.clear();
      for (std::size_t j = 0; j < n; ++j)
        if ((s >> j) & 1u) cols.push_back(j);
      auto r = detail::disc_search(a, cols, Norm::inf(), inner, DiscStrategy::Auto);
      Candidate cand{std::get<BigInt>(r.value), cols, std::move(r.witness)};
      if (!best || better(cand, *best)) best = std::move(cand);
    }
    results[c] = std::move(best);
  });

  std::optional<Candidate> best;
  for (auto& r : results)
    if (r && (!best || better(*r, *best))) best = std::move(r);

  SubmatrixIndex idx;
  idx.rows.resize(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) idx.rows[i] = i;
  idx.cols = best->cols;
  return {std::move(best->value), std::move(idx), std::move(best->coloring)};
}

}  // namespace disclab
