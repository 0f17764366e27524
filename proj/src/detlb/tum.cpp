#include <algorithm>

#include "detlb/enumerate.hpp"
#include "disclab/detlb.hpp"
#include "disclab/error.hpp"

namespace disclab {

TumResult is_tum(const IntMatrix& a, const Limits& limits) {
  if (!a.is_ternary()) throw Error(ErrorKind::EntriesOutOfRange, "TUM check expects entries in {-1, 0, 1}");
  TumResult out;
  out.determinants = a.size();  // order 1 holds by the entry check
  const std::size_t top = std::min(a.rows(), a.cols());
  for (std::size_t k = 2; k <= top; ++k) {
    const std::uint64_t full =
        detail::mul_saturating(detail::binomial_saturating(a.rows(), k), detail::binomial_saturating(a.cols(), k));
    const std::uint64_t left = limits.det_budget > out.determinants ? limits.det_budget - out.determinants : 0;
    const std::uint64_t count = std::min(full, left);

    struct Hit {
      SubmatrixIndex idx;
      BigInt det;
    };
    std::vector<std::optional<Hit>> hits(detail::chunk_count(std::max<std::uint64_t>(count, 1), limits.threads));
    if (count > 0) {
      detail::for_each_square(a, k, count, limits.threads,
                              [&](std::uint64_t c, const auto& rows, const auto& cols, detail::SquareDets& dets) {
                                BigInt d = dets.det(rows, cols);
                                if (cmpabs(d, 1ul) > 0) {
                                  hits[c] = Hit{SubmatrixIndex{rows, cols}, std::move(d)};
                                  return false;
                                }
                                return true;
                              });
    }
    for (auto& h : hits) {
      if (!h) continue;
      // Chunks cover increasing ranges, so the first hit is the earliest.
      out.tum = false;
      out.counterexample = std::move(h->idx);
      out.det = std::move(h->det);
      out.determinants += count;
      return out;
    }
    out.determinants += count;
    if (count < full) {
      throw Error(ErrorKind::BudgetExceeded, "determinant budget of " + std::to_string(limits.det_budget) +
                                                 " evaluations exhausted before the TUM check finished");
    }
  }
  return out;
}

}  // namespace disclab
