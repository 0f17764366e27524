#include <cmath>

#include "disclab/kernels/kernels.hpp"

namespace disclab::kernels {

namespace {

inline std::int32_t iabs(std::int32_t v) { return v < 0 ? -v : v; }

void i32_axpy(std::int32_t* acc, const std::int32_t* col, std::int32_t coef, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += coef * col[i];
}

std::int32_t i32_axpy_maxabs(std::int32_t* acc, const std::int32_t* col, std::int32_t coef, std::size_t n) {
  std::int32_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] += coef * col[i];
    const std::int32_t a = iabs(acc[i]);
    if (a > best) best = a;
  }
  return best;
}

std::int64_t i32_axpy_sumabs(std::int32_t* acc, const std::int32_t* col, std::int32_t coef, std::size_t n) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] += coef * col[i];
    total += iabs(acc[i]);
  }
  return total;
}

std::int32_t i32_maxabs(const std::int32_t* v, std::size_t n) {
  std::int32_t best = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (iabs(v[i]) > best) best = iabs(v[i]);
  return best;
}

std::int64_t i32_sumabs(const std::int32_t* v, std::size_t n) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += iabs(v[i]);
  return total;
}

void f64_axpy(double* acc, const double* col, double coef, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double prod = coef * col[i];
    acc[i] = acc[i] + prod;
  }
}

double f64_maxabs(const double* v, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::fabs(v[i]);
    if (a > best) best = a;
  }
  return best;
}

constexpr KernelTable kScalar{
    Isa::Scalar, "scalar", i32_axpy, i32_axpy_maxabs, i32_axpy_sumabs, i32_maxabs, i32_sumabs, f64_axpy, f64_maxabs,
};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace disclab::kernels
