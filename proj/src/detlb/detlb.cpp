#include <algorithm>
#include <cmath>
#include <numbers>

#include "common/combinations.hpp"
#include "detlb/enumerate.hpp"
#include "disclab/constructions.hpp"
#include "disclab/detlb.hpp"
#include "disclab/disc.hpp"
#include "disclab/error.hpp"

namespace disclab {

std::strong_ordering compare_value(const DetLbCertificate& a, const DetLbCertificate& b) {
  return root_power_compare(a.det, a.order, b.det, b.order);
}

DetLbCertificate detlb_exact(const IntMatrix& a, std::optional<std::size_t> max_k, const Limits& limits) {
  const std::size_t top = std::min(a.rows(), a.cols());
  if (max_k && *max_k == 0) throw Error(ErrorKind::InvalidArgument, "max_k must be at least 1");
  const std::size_t kmax = std::min(top, max_k.value_or(top));

  std::optional<DetLbCertificate> best;
  std::uint64_t used = 0;
  bool partial = false;
  for (std::size_t k = 1; k <= kmax && !partial; ++k) {
    const std::uint64_t full =
        detail::mul_saturating(detail::binomial_saturating(a.rows(), k), detail::binomial_saturating(a.cols(), k));
    std::uint64_t count = full;
    if (count > limits.det_budget - used) {
      count = limits.det_budget - used;
      partial = true;
    }
    if (count == 0) break;

    const auto chunks = detail::chunk_count(count, limits.threads);
    std::vector<std::optional<DetLbCertificate>> found(chunks);
    detail::for_each_square(a, k, count, limits.threads,
                            [&](std::uint64_t c, const auto& rows, const auto& cols, detail::SquareDets& dets) {
                              BigInt d = dets.det(rows, cols);
                              auto& slot = found[c];
                              if (!slot || cmpabs(d, slot->det) > 0) {
                                DetLbCertificate cert;
                                cert.order = k;
                                cert.index = SubmatrixIndex{rows, cols};
                                cert.det = std::move(d);
                                slot = std::move(cert);
                              }
                              return true;
                            });
    used += count;
    for (auto& f : found) {
      if (!f) continue;
      if (!best || compare_value(*f, *best) > 0) best = std::move(f);
    }
  }
  best->value_float = root_value(best->det, best->order);
  best->partial = partial;
  best->determinants = used;
  return std::move(*best);
}

double stacked_detlb_bound(double D, std::size_t t) {
  if (D < 0 || t == 0) throw Error(ErrorKind::InvalidArgument, "stacked bound needs D >= 0 and t >= 1");
  return D * std::sqrt(std::numbers::e * static_cast<double>(t));
}

namespace {

DetLbCertificate complete_detlb(const IntMatrix& a, const Limits& limits) {
  auto cert = detlb_exact(a, std::nullopt, limits);
  if (cert.partial) {
    throw Error(ErrorKind::BudgetExceeded, "determinant budget of " + std::to_string(limits.det_budget) +
                                               " evaluations exhausted");
  }
  return cert;
}

}  // namespace

DetLbAmplification verify_detlb_amplification(const IntMatrix& a, unsigned N, const Limits& limits) {
  const auto big = complete_detlb(kronecker(power_matrix(N, limits), a), limits);
  const auto base = complete_detlb(a, limits);
  const double lhs = big.value_float;
  const double rhs = std::sqrt(std::numbers::e * N) * base.value_float;
  return {lhs, rhs, lhs <= rhs + 1e-9};
}

LsvCheck lsv_check(const IntMatrix& a, const Limits& limits) {
  auto cert = complete_detlb(a, limits);
  auto h = herdisc_exact(a, limits).value;
  const bool holds = root_power_compare(cert.det, cert.order, BigInt(2 * h), 1) != std::strong_ordering::greater;
  return {std::move(cert), std::move(h), holds};
}

}  // namespace disclab
