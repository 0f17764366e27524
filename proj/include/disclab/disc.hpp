#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "disclab/bigint.hpp"
#include "disclab/exact.hpp"
#include "disclab/haar_tree.hpp"
#include "disclab/int_matrix.hpp"
#include "disclab/limits.hpp"

namespace disclab {

struct Norm {
  enum class Kind { Inf, One, P };
  Kind kind = Kind::Inf;
  double p = 0.0;  // only meaningful for Kind::P

  static Norm inf() { return {Kind::Inf, 0.0}; }
  static Norm one() { return {Kind::One, 1.0}; }
  // p >= 1; p == 1 and p == infinity are routed to the exact kinds.
  static Norm lp(double p);

  friend bool operator==(const Norm&, const Norm&) = default;
};

std::string to_string(const Norm& n);

// A +-1 vector over the columns of a matrix.
struct Coloring {
  std::vector<std::int8_t> values;

  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Throws DimensionMismatch or InvalidArgument.
void validate(const Coloring& x, const IntMatrix& a);

// BigInt for inf, BigRational for one, double for general p.
using DiscValue = std::variant<BigInt, BigRational, double>;

std::string to_string(const DiscValue& v);
double to_double(const DiscValue& v);

DiscValue disc_of_coloring(const IntMatrix& a, const Coloring& x, Norm norm);

enum class DiscStrategy {
  Auto,            // branch and bound for inf, Gray code otherwise
  GrayCode,        // exhaustive, one O(m) row-sum update per colouring
  BranchAndBound,  // inf only; depth-first with partial-row-sum bounds
};

struct DiscResult {
  Norm norm;
  DiscValue value;
  Coloring witness;
  std::uint64_t nodes_explored = 0;
};

// Global minimum over {+-1}^n with x_0 = +1 fixed. Among optimal colourings the
// witness is the lexicographically smallest, ordering -1 before +1.
DiscResult disc_exact(const IntMatrix& a, Norm norm, const Limits& limits = {},
                      DiscStrategy strategy = DiscStrategy::Auto);

struct HerdiscResult {
  BigInt value;
  SubmatrixIndex witness;  // all rows, the maximizing column subset
  Coloring witness_coloring;  // optimal colouring of that column subset
};

// Maximum of disc_inf over nonempty column subsets. Ties prefer the smaller
// subset, then the lexicographically smaller column list.
HerdiscResult herdisc_exact(const IntMatrix& a, const Limits& limits = {});

namespace detail {
// disc_inf restricted to a column subset; an empty subset yields 0 with an
// empty witness.
DiscResult disc_inf_columns(const IntMatrix& a, const std::vector<std::size_t>& cols, const Limits& limits);
}  // namespace detail

struct AdversarialRow {
  std::size_t row_index;
  BigInt signed_sum;
};

// Walks down from r, taking the left edge at column t iff x_t == x_r. Every
// nonzero of the reached row then agrees in sign with x_r, so
// |row . x| = depth + 1.
AdversarialRow adversarial_row(const HaarTree& tree, const Coloring& x);

struct AmplificationCheck {
  BigInt lhs;       // disc_inf(P_N (x) A)
  BigRational rhs;  // N * disc_1(A) / 2
  bool holds;
};
AmplificationCheck verify_disc_amplification(const IntMatrix& a, unsigned N, const Limits& limits = {});

struct MultisetMode {
  bool exhaustive = true;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  static MultisetMode all() { return {true, 0, 0}; }
  static MultisetMode sampled(std::uint64_t trials, std::uint64_t seed) { return {false, trials, seed}; }
};

struct MultisetCheck {
  bool holds;
  std::uint64_t colorings_checked;
};

// sorted(haar_tilde(k) x) == sorted(haar_tilde(k) 1) for the tested x.
MultisetCheck multiset_invariance_check(unsigned k, MultisetMode mode, const Limits& limits = {});

struct PmSosCheck {
  BigInt disc_pm;         // disc_inf(haar_pm(k))
  BigRational half_disc;  // disc_inf(haar(k)) / 2
  bool holds;
};
PmSosCheck pm_sos_check(unsigned k, const Limits& limits = {});

}  // namespace disclab
