#include <bit>
#include <cmath>
#include <optional>

#include "common/parallel.hpp"
#include "disc/search.hpp"
#include "disclab/disc.hpp"
#include "disclab/error.hpp"
#include "disclab/kernels/kernels.hpp"

namespace disclab::detail {

namespace {

constexpr std::int64_t kI32RowCap = std::int64_t{1} << 29;

// -1 sorts before +1 at the first differing column; mask bit j-1 set means
// column j is coloured -1.
inline bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t d = a ^ b;
  return (a & (d & (~d + 1))) != 0;
}

inline int sign_of(std::uint64_t mask, std::size_t col) { return col > 0 && ((mask >> (col - 1)) & 1u) ? -1 : 1; }

double lp_value(double powsum, std::size_t m, double p) { return std::pow(powsum / static_cast<double>(m), 1.0 / p); }

// Row sums kept in int32 and updated through the kernel table.
class I32Acc {
 public:
  using Obj = std::int64_t;

  I32Acc(const Dense32& d, Norm norm) : d_(d), norm_(norm), k_(kernels::active()), r_(d.m) {}

  Obj reset(std::uint64_t mask) {
    std::fill(r_.begin(), r_.end(), 0);
    for (std::size_t j = 0; j < d_.n; ++j) k_.i32_axpy(r_.data(), d_.column(j), sign_of(mask, j), d_.m);
    return objective();
  }

  Obj flip(std::size_t col, int new_sign) {
    const std::int32_t coef = 2 * new_sign;
    if (norm_.kind == Norm::Kind::Inf) return k_.i32_axpy_maxabs(r_.data(), d_.column(col), coef, d_.m);
    return k_.i32_axpy_sumabs(r_.data(), d_.column(col), coef, d_.m);
  }

 private:
  Obj objective() const {
    if (norm_.kind == Norm::Kind::Inf) return k_.i32_maxabs(r_.data(), d_.m);
    return k_.i32_sumabs(r_.data(), d_.m);
  }

  const Dense32& d_;
  Norm norm_;
  const kernels::KernelTable& k_;
  std::vector<std::int32_t> r_;
};

// General p on int32 data; the objective is the normalized lp value.
class I32LpAcc {
 public:
  using Obj = double;

  I32LpAcc(const Dense32& d, Norm norm) : d_(d), p_(norm.p), k_(kernels::active()), r_(d.m) {}

  Obj reset(std::uint64_t mask) {
    std::fill(r_.begin(), r_.end(), 0);
    for (std::size_t j = 0; j < d_.n; ++j) k_.i32_axpy(r_.data(), d_.column(j), sign_of(mask, j), d_.m);
    return objective();
  }

  Obj flip(std::size_t col, int new_sign) {
    k_.i32_axpy(r_.data(), d_.column(col), 2 * new_sign, d_.m);
    return objective();
  }

 private:
  Obj objective() const {
    double s = 0.0;
    for (auto v : r_) s += std::pow(std::fabs(static_cast<double>(v)), p_);
    return lp_value(s, d_.m, p_);
  }

  const Dense32& d_;
  double p_;
  const kernels::KernelTable& k_;
  std::vector<std::int32_t> r_;
};

// Arbitrary-precision fallback for entries that do not fit the int32 path.
class BigAcc {
 public:
  using Obj = BigInt;

  BigAcc(const IntMatrix& a, const std::vector<std::size_t>& cols, Norm norm)
      : a_(a), cols_(cols), norm_(norm), r_(a.rows()) {}

  Obj reset(std::uint64_t mask) {
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      r_[i] = 0;
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (sign_of(mask, j) > 0)
          r_[i] += a_(i, cols_[j]);
        else
          r_[i] -= a_(i, cols_[j]);
      }
    }
    return objective();
  }

  Obj flip(std::size_t col, int new_sign) {
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      const BigInt delta = 2 * a_(i, cols_[col]);
      if (new_sign > 0)
        r_[i] += delta;
      else
        r_[i] -= delta;
    }
    return objective();
  }

 private:
  Obj objective() const {
    BigInt out = 0;
    for (const auto& v : r_) {
      if (norm_.kind == Norm::Kind::Inf) {
        if (abs(v) > out) out = abs(v);
      } else {
        out += abs(v);
      }
    }
    return out;
  }

  const IntMatrix& a_;
  const std::vector<std::size_t>& cols_;
  Norm norm_;
  std::vector<BigInt> r_;
};

class BigLpAcc {
 public:
  using Obj = double;

  BigLpAcc(const IntMatrix& a, const std::vector<std::size_t>& cols, Norm norm)
      : a_(a), cols_(cols), p_(norm.p) {}

  Obj reset(std::uint64_t mask) {
    mask_ = mask;
    return objective();
  }

  Obj flip(std::size_t col, int /*new_sign*/) {
    mask_ ^= std::uint64_t{1} << (col - 1);
    return objective();
  }

 private:
  Obj objective() const {
    double s = 0.0;
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      BigInt v = 0;
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (sign_of(mask_, j) > 0)
          v += a_(i, cols_[j]);
        else
          v -= a_(i, cols_[j]);
      }
      s += std::pow(std::fabs(v.get_d()), p_);
    }
    return lp_value(s, a_.rows(), p_);
  }

  const IntMatrix& a_;
  const std::vector<std::size_t>& cols_;
  double p_;
  std::uint64_t mask_ = 0;
};

template <class Obj>
struct Found {
  Obj value;
  std::uint64_t mask;
};

// Exhaustive Gray-code walk over the 2^free_bits colourings with x_0 = +1.
template <class Acc, class Make>
Found<typename Acc::Obj> gray_search(unsigned free_bits, unsigned threads, Make make, std::uint64_t& nodes) {
  using Obj = typename Acc::Obj;
  const std::uint64_t total = std::uint64_t{1} << free_bits;
  const std::uint64_t chunks = chunk_count(total, threads);
  std::vector<std::optional<Found<Obj>>> results(chunks);
  parallel_chunks(total, threads, [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
    if (lo >= hi) return;
    Acc acc = make();
    std::uint64_t g = lo ^ (lo >> 1);
    Found<Obj> best{acc.reset(g), g};
    for (std::uint64_t i = lo; i + 1 < hi; ++i) {
      const unsigned bit = static_cast<unsigned>(std::countr_zero(i + 1));
      g ^= std::uint64_t{1} << bit;
      Obj v = acc.flip(bit + 1, ((g >> bit) & 1u) ? -1 : 1);
      if (v < best.value || (v == best.value && lex_less(g, best.mask))) best = {std::move(v), g};
    }
    results[c] = std::move(best);
  });
  nodes = total;
  std::optional<Found<Obj>> out;
  for (auto& r : results) {
    if (!r) continue;
    if (!out || r->value < out->value || (r->value == out->value && lex_less(r->mask, out->mask))) out = std::move(r);
  }
  return std::move(*out);
}

Coloring coloring_from_mask(std::uint64_t mask, std::size_t n) {
  Coloring x;
  x.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) x.values[j] = static_cast<std::int8_t>(sign_of(mask, j));
  return x;
}

// Depth-first search in lexicographic order (-1 first) with the bound
// max_i max(0, |partial_i| - sum of |A_ij| over unassigned j).
class BranchAndBound {
 public:
  explicit BranchAndBound(const Dense32& d) : d_(d), rem_((d.n + 1) * d.m, 0), r_(d.m, 0), x_(d.n, 1) {
    for (std::size_t j = d.n; j-- > 0;) {
      const auto* col = d.column(j);
      for (std::size_t i = 0; i < d.m; ++i) rem_[j * d.m + i] = rem_[(j + 1) * d.m + i] + std::abs(std::int64_t{col[i]});
    }
  }

  Found<std::int64_t> run() {
    // Seed with the all-ones value + 1 so the first leaf that is at least as
    // good becomes the incumbent.
    std::int64_t first = 0;
    for (std::size_t i = 0; i < d_.m; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < d_.n; ++j) s += d_.column(j)[i];
      first = std::max(first, s < 0 ? -s : s);
    }
    incumbent_ = first + 1;
    dfs(0);
    return {incumbent_, best_mask_};
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void dfs(std::size_t j) {
    ++nodes_;
    const std::size_t m = d_.m;
    if (j == d_.n) {
      std::int64_t v = 0;
      for (std::size_t i = 0; i < m; ++i) v = std::max(v, r_[i] < 0 ? -r_[i] : r_[i]);
      if (v < incumbent_) {
        incumbent_ = v;
        best_mask_ = 0;
        for (std::size_t t = 1; t < d_.n; ++t)
          if (x_[t] < 0) best_mask_ |= std::uint64_t{1} << (t - 1);
      }
      return;
    }
    const std::int64_t* rem = rem_.data() + j * m;
    std::int64_t bound = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const std::int64_t a = r_[i] < 0 ? -r_[i] : r_[i];
      bound = std::max(bound, a - rem[i]);
    }
    if (bound >= incumbent_) return;
    const auto* col = d_.column(j);
    for (int s : {-1, 1}) {
      if (j == 0 && s < 0) continue;
      for (std::size_t i = 0; i < m; ++i) r_[i] += s * col[i];
      x_[j] = static_cast<std::int8_t>(s);
      dfs(j + 1);
      for (std::size_t i = 0; i < m; ++i) r_[i] -= s * col[i];
    }
  }

  const Dense32& d_;
  std::vector<std::int64_t> rem_;
  std::vector<std::int64_t> r_;
  std::vector<std::int8_t> x_;
  std::int64_t incumbent_ = 0;
  std::uint64_t best_mask_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

const std::int32_t* Dense32::column(std::size_t j) const noexcept { return data.data() + j * m; }

std::optional<Dense32> to_dense32(const IntMatrix& a, const std::vector<std::size_t>& cols) {
  Dense32 d;
  d.m = a.rows();
  d.n = cols.size();
  d.data.resize(d.m * d.n);
  for (std::size_t i = 0; i < d.m; ++i) {
    std::int64_t row_abs = 0;
    for (std::size_t j = 0; j < d.n; ++j) {
      const BigInt& v = a(i, cols[j]);
      if (!v.fits_slong_p()) return std::nullopt;
      const long x = v.get_si();
      if (x > kI32RowCap || x < -kI32RowCap) return std::nullopt;
      row_abs += x < 0 ? -x : x;
      if (row_abs > kI32RowCap) return std::nullopt;
      d.data[j * d.m + i] = static_cast<std::int32_t>(x);
    }
  }
  return d;
}

DiscResult disc_search(const IntMatrix& a, const std::vector<std::size_t>& cols, Norm norm, const Limits& limits,
                       DiscStrategy strategy) {
  const std::size_t n = cols.size();
  if (n == 0) {
    DiscValue zero;
    if (norm.kind == Norm::Kind::Inf)
      zero = BigInt(0);
    else if (norm.kind == Norm::Kind::One)
      zero = BigRational(0, 1);
    else
      zero = 0.0;
    return {norm, zero, Coloring{}, 0};
  }
  if (n > limits.exhaustive_cols || n > 63) {
    throw Error(ErrorKind::SearchSpaceTooLarge, std::to_string(n) + " columns exceed the exhaustive cap of " +
                                                    std::to_string(limits.exhaustive_cols));
  }
  if (strategy == DiscStrategy::BranchAndBound && norm.kind != Norm::Kind::Inf) {
    throw Error(ErrorKind::InvalidArgument, "branch and bound supports the inf norm only");
  }
  if (strategy == DiscStrategy::Auto)
    strategy = norm.kind == Norm::Kind::Inf ? DiscStrategy::BranchAndBound : DiscStrategy::GrayCode;

  const auto dense = to_dense32(a, cols);
  const unsigned free_bits = static_cast<unsigned>(n - 1);
  const unsigned threads = limits.threads;
  std::uint64_t nodes = 0;
  const auto m_big = BigInt(static_cast<unsigned long>(a.rows()));

  if (norm.kind == Norm::Kind::P) {
    Found<double> f = dense ? gray_search<I32LpAcc>(free_bits, threads, [&] { return I32LpAcc(*dense, norm); }, nodes)
                            : gray_search<BigLpAcc>(free_bits, threads, [&] { return BigLpAcc(a, cols, norm); }, nodes);
    return {norm, f.value, coloring_from_mask(f.mask, n), nodes};
  }

  BigInt value;
  std::uint64_t mask = 0;
  if (dense && strategy == DiscStrategy::BranchAndBound) {
    BranchAndBound bb(*dense);
    auto f = bb.run();
    value = BigInt(static_cast<long>(f.value));
    mask = f.mask;
    nodes = bb.nodes();
  } else if (dense) {
    auto f = gray_search<I32Acc>(free_bits, threads, [&] { return I32Acc(*dense, norm); }, nodes);
    value = BigInt(static_cast<long>(f.value));
    mask = f.mask;
  } else {
    auto f = gray_search<BigAcc>(free_bits, threads, [&] { return BigAcc(a, cols, norm); }, nodes);
    value = std::move(f.value);
    mask = f.mask;
  }
  DiscValue out = norm.kind == Norm::Kind::Inf ? DiscValue(value) : DiscValue(BigRational(value, m_big));
  return {norm, std::move(out), coloring_from_mask(mask, n), nodes};
}

DiscResult disc_inf_columns(const IntMatrix& a, const std::vector<std::size_t>& cols, const Limits& limits) {
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= a.cols() || (j > 0 && cols[j] <= cols[j - 1]))
      throw Error(ErrorKind::IndexOutOfRange, "column subset must be sorted, distinct and in range");
  }
  return disc_search(a, cols, Norm::inf(), limits, DiscStrategy::Auto);
}

}  // namespace disclab::detail

namespace disclab {

DiscResult disc_exact(const IntMatrix& a, Norm norm, const Limits& limits, DiscStrategy strategy) {
  std::vector<std::size_t> cols(a.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return detail::disc_search(a, cols, norm, limits, strategy);
}

}  // namespace disclab
