#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "disclab/bigint.hpp"
#include "disclab/int_matrix.hpp"
#include "disclab/limits.hpp"

namespace disclab {

// Haar basis matrix: A_0 = [1], A_k = [[A_{k-1}, I], [A_{k-1}, -I]].
IntMatrix haar(unsigned k, const Limits& limits = {});
// haar(k) without its all-ones first column; k >= 1.
IntMatrix haar_tilde(unsigned k, const Limits& limits = {});
// Indicators of the positive / negative entries of haar(k).
IntMatrix haar_pos(unsigned k, const Limits& limits = {});
IntMatrix haar_neg(unsigned k, const Limits& limits = {});
// haar_pos(k) stacked above haar_neg(k).
IntMatrix haar_pm(unsigned k, const Limits& limits = {});

// 2^N x N incidence matrix of the power set; row i holds the binary expansion
// of i with the least significant bit in column 0.
IntMatrix power_matrix(unsigned N, const Limits& limits = {});

// Sylvester Hadamard matrix of order n mapped entrywise by a -> (a + 1) / 2.
IntMatrix hadamard01(std::size_t n, const Limits& limits = {});
// Exact |det(hadamard01(n))| = 2^-(n-1) * n^(n/2) for n a power of two.
BigInt hadamard01_abs_det(std::size_t n);

// disc_1(A_k) in closed form: (k+1)/2^k * C(k, floor((k+1)/2)).
BigRational disc1_closed(unsigned k);

struct BinomialIdentity {
  BigInt lhs;  // sum_l C(k,l) |k - 2l|
  BigInt rhs;  // 2k C(k-1, floor(k/2))
  bool equal;
};
BinomialIdentity binomial_abs_identity_check(unsigned k);

enum class Family { Haar, HaarPm };
const char* to_string(Family f) noexcept;

IntMatrix family_matrix(Family f, unsigned k, const Limits& limits = {});

// power_matrix(N) (x) family matrix of depth k.
IntMatrix build_kron_instance(unsigned N, unsigned k, Family family, const Limits& limits = {});

struct GapCertificate {
  BigRational disc_lower;
  double detlb_upper;
};
GapCertificate gap_certificate(unsigned N, unsigned k, Family family);

enum class GapBranch { SmallM, Kron };
const char* to_string(GapBranch b) noexcept;

struct GapInstance {
  IntMatrix matrix;
  GapBranch branch;
  unsigned N;  // 0 on the small-m branch
  unsigned k;
  double eps;
  std::uint64_t m;
  std::uint64_t n;
  Family family;
  BigRational disc_lower;
  double detlb_upper;
  bool degenerate;  // k == 0: the sqrt(N k) gap collapses
};

// Matrix of m rows and n columns with a certified discrepancy lower bound and
// determinant-lower-bound upper bound; see README for the two branches.
GapInstance build_gap_instance(std::uint64_t m, std::uint64_t n, double eps, const Limits& limits = {});

}  // namespace disclab
