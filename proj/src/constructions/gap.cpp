#include <bit>
#include <cmath>
#include <numbers>

#include "constructions/size_check.hpp"
#include "disclab/constructions.hpp"
#include "disclab/exact.hpp"

namespace disclab {

const char* to_string(GapBranch b) noexcept { return b == GapBranch::SmallM ? "small-m" : "kron"; }

GapCertificate gap_certificate(unsigned N, unsigned k, Family family) {
  if (N == 0) throw Error(ErrorKind::InvalidArgument, "certificate needs N >= 1");
  const double e = std::numbers::e;
  const double amplification = std::sqrt(e * N);
  if (family == Family::Haar) {
    // disc(P_N (x) A) >= N disc_1(A) / 2 and detlb(A_k) <= 2
    return {BigRational(BigInt(N)) * disc1_closed(k) / BigRational(2, 1), amplification * 2.0};
  }
  // The stacked indicators lose a factor 2 in disc_1 (triangle inequality) and
  // two TUM blocks give detlb <= sqrt(2e).
  return {BigRational(BigInt(N)) * disc1_closed(k) / BigRational(4, 1), amplification * std::sqrt(2.0 * e)};
}

GapInstance build_gap_instance(std::uint64_t m, std::uint64_t n, double eps, const Limits& limits) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "gap instance needs n >= 2");
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorKind::InvalidArgument, "eps must lie in (0, 1)");
  if (m < n) throw Error(ErrorKind::InvalidArgument, "gap instance needs m >= n");

  const auto n_sq = static_cast<unsigned __int128>(n) * n;
  if (static_cast<unsigned __int128>(m) <= n_sq) {
    detail::check_entries(m, n, limits, "gap instance");
    const unsigned k = static_cast<unsigned>(std::bit_width(n) - 1);
    // haar(k) has exactly k+1 nonzeros per row and every colouring leaves a row
    // with |row . x| = k+1, while detlb(A_k) <= 2.
    return GapInstance{pad_zeros(haar(k, limits), m, n),
                       GapBranch::SmallM,
                       0,
                       k,
                       eps,
                       m,
                       n,
                       Family::Haar,
                       BigRational(BigInt(k + 1ul)),
                       2.0,
                       false};
  }

  // Only the Kronecker branch is bounded above; m <= n^2 is always admissible.
  const long double log2_m = std::log2(static_cast<long double>(m));
  const long double max_log2_m = std::pow(static_cast<long double>(n), 1.0L - eps);
  if (log2_m > max_log2_m + 1e-12L) {
    throw Error(ErrorKind::OutOfRange, "m = " + std::to_string(m) + " exceeds 2^(n^(1-eps)) = 2^" +
                                           std::to_string(static_cast<double>(max_log2_m)));
  }
  detail::check_entries(m, n, limits, "gap instance");
  const unsigned N = static_cast<unsigned>(std::bit_width(m / n) - 1);
  const long double k_real = static_cast<long double>(eps) * std::log2(static_cast<long double>(n));
  const unsigned k = static_cast<unsigned>(std::floor(k_real + 1e-9L));
  auto cert = gap_certificate(N, k, Family::HaarPm);
  return GapInstance{pad_zeros(build_kron_instance(N, k, Family::HaarPm, limits), m, n),
                     GapBranch::Kron,
                     N,
                     k,
                     eps,
                     m,
                     n,
                     Family::HaarPm,
                     std::move(cert.disc_lower),
                     cert.detlb_upper,
                     k == 0};
}

}  // namespace disclab
