#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "disclab/bigint.hpp"
#include "disclab/exact.hpp"
#include "disclab/int_matrix.hpp"
#include "disclab/limits.hpp"

namespace disclab {

struct DetLbCertificate {
  std::size_t order = 0;  // k
  SubmatrixIndex index;
  BigInt det;
  double value_float = 0.0;  // |det|^(1/k), reporting only
  bool partial = false;      // the determinant budget ran out
  std::uint64_t determinants = 0;
};

// Orders certificates by |det|^(1/k), exactly.
std::strong_ordering compare_value(const DetLbCertificate& a, const DetLbCertificate& b);

// Maximum of |det B|^(1/k) over k x k submatrices, k = 1..max_k (default
// min(m, n)). Enumeration is by ascending k, then row subset, then column
// subset, both lexicographic; the earliest maximizer wins. When the budget of
// determinant evaluations runs out the best certificate so far is returned with
// partial = true.
DetLbCertificate detlb_exact(const IntMatrix& a, std::optional<std::size_t> max_k = std::nullopt,
                             const Limits& limits = {});

struct TumResult {
  bool tum = true;
  std::optional<SubmatrixIndex> counterexample;  // first violator in enumeration order
  std::optional<BigInt> det;
  std::uint64_t determinants = 0;
};

// Entries must lie in {-1, 0, 1}. Throws BudgetExceeded when the enumeration
// would pass the budget without finding a violator.
TumResult is_tum(const IntMatrix& a, const Limits& limits = {});

// D * sqrt(e * t): detlb bound for t stacked blocks of detlb <= D.
double stacked_detlb_bound(double D, std::size_t t);

struct DetLbAmplification {
  double lhs;  // detlb(P_N (x) A)
  double rhs;  // sqrt(e N) * detlb(A)
  bool holds;  // lhs <= rhs + 1e-9
};
DetLbAmplification verify_detlb_amplification(const IntMatrix& a, unsigned N, const Limits& limits = {});

struct LsvCheck {
  DetLbCertificate detlb;
  BigInt herdisc;
  bool holds;  // detlb <= 2 herdisc, decided exactly
};
LsvCheck lsv_check(const IntMatrix& a, const Limits& limits = {});

struct HadamardCertificate {
  std::size_t d = 0;        // VC dimension
  std::size_t d_prime = 0;  // largest power of two <= d
  double bound = 0.0;       // sqrt(d') / 2
  SubmatrixIndex witness;   // rows and columns realizing hadamard01(d')
  BigInt det;               // det of the witness submatrix
};

// Locates hadamard01(d') inside a 0/1 matrix through a shattered column set.
HadamardCertificate hadamard_detlb_certificate(const IntMatrix& a, const Limits& limits = {});

}  // namespace disclab
