#include <bit>
#include <cstdint>

#include "constructions/size_check.hpp"
#include "disclab/constructions.hpp"
#include "disclab/exact.hpp"

namespace disclab {

IntMatrix power_matrix(unsigned N, const Limits& limits) {
  if (N == 0) throw Error(ErrorKind::InvalidArgument, "power_matrix needs N >= 1");
  detail::check_entries(detail::pow2(N), N, limits, "power matrix");
  const std::size_t rows = std::size_t{1} << N;
  std::vector<BigInt> data;
  data.reserve(rows * N);
  for (std::size_t i = 0; i < rows; ++i)
    for (unsigned j = 0; j < N; ++j) data.emplace_back(static_cast<unsigned long>((i >> j) & 1u));
  return IntMatrix(rows, N, std::move(data));
}

IntMatrix hadamard01(std::size_t n, const Limits& limits) {
  if (n == 0 || !std::has_single_bit(n)) {
    throw Error(ErrorKind::NotPowerOfTwo, "hadamard01 order " + std::to_string(n) + " is not a power of two");
  }
  detail::check_entries(n, n, limits, "hadamard matrix");
  std::vector<BigInt> data;
  data.reserve(n * n);
  // Sylvester: H[i][j] = (-1)^popcount(i & j); +1 maps to 1, -1 maps to 0.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) data.emplace_back(std::popcount(i & j) % 2 == 0 ? 1 : 0);
  return IntMatrix(n, n, std::move(data));
}

BigInt hadamard01_abs_det(std::size_t n) {
  if (n == 0 || !std::has_single_bit(n)) {
    throw Error(ErrorKind::NotPowerOfTwo, "hadamard01 order " + std::to_string(n) + " is not a power of two");
  }
  // n = 2^t: n^(n/2) / 2^(n-1) = 2^(t n / 2 - n + 1)
  const std::size_t t = static_cast<std::size_t>(std::countr_zero(n));
  const std::size_t e = t * n / 2 + 1 - n;
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

namespace {

BigInt binom(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt pow2_big(unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace

BigRational disc1_closed(unsigned k) {
  return BigRational(BigInt(k + 1ul) * binom(k, (k + 1ul) / 2), pow2_big(k));
}

BinomialIdentity binomial_abs_identity_check(unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "identity is stated for k >= 1");
  BigInt lhs = 0;
  for (unsigned l = 0; l <= k; ++l) {
    const long diff = static_cast<long>(k) - 2 * static_cast<long>(l);
    lhs += binom(k, l) * BigInt(diff < 0 ? -diff : diff);
  }
  BigInt rhs = BigInt(2ul * k) * binom(k - 1, k / 2);
  const bool equal = lhs == rhs;
  return {std::move(lhs), std::move(rhs), equal};
}

const char* to_string(Family f) noexcept { return f == Family::Haar ? "haar" : "haar_pm"; }

IntMatrix family_matrix(Family f, unsigned k, const Limits& limits) {
  return f == Family::Haar ? haar(k, limits) : haar_pm(k, limits);
}

IntMatrix build_kron_instance(unsigned N, unsigned k, Family family, const Limits& limits) {
  if (N == 0) throw Error(ErrorKind::InvalidArgument, "kron instance needs N >= 1");
  const unsigned row_bits = N + k + (family == Family::HaarPm ? 1 : 0);
  detail::check_entries(detail::pow2(row_bits), static_cast<unsigned __int128>(N) * detail::pow2(k), limits,
                        "kron instance");
  return kronecker(power_matrix(N, limits), family_matrix(family, k, limits));
}

}  // namespace disclab
