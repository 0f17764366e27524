// Compiled with -mavx2; only reached after a runtime CPUID check.

#include <immintrin.h>

#include <cmath>

#include "disclab/kernels/kernels.hpp"

namespace disclab::kernels {

namespace {

inline std::int32_t hmax_epi32(__m256i v) {
  __m128i m = _mm_max_epi32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(m);
}

inline std::int64_t hsum_epi64(__m256i v) {
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

// widen eight int32 lanes into two int64 accumulators
inline __m256i add_widened(__m256i sum, __m256i v) {
  sum = _mm256_add_epi64(sum, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(v)));
  return _mm256_add_epi64(sum, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(v, 1)));
}

inline std::int32_t iabs(std::int32_t v) { return v < 0 ? -v : v; }

void i32_axpy(std::int32_t* acc, const std::int32_t* col, std::int32_t coef, std::size_t n) {
  const __m256i c = _mm256_set1_epi32(coef);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col + i));
    a = _mm256_add_epi32(a, _mm256_mullo_epi32(c, x));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), a);
  }
  for (; i < n; ++i) acc[i] += coef * col[i];
}

std::int32_t i32_axpy_maxabs(std::int32_t* acc, const std::int32_t* col, std::int32_t coef, std::size_t n) {
  const __m256i c = _mm256_set1_epi32(coef);
  __m256i best = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col + i));
    a = _mm256_add_epi32(a, _mm256_mullo_epi32(c, x));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), a);
    best = _mm256_max_epi32(best, _mm256_abs_epi32(a));
  }
  std::int32_t out = hmax_epi32(best);
  for (; i < n; ++i) {
    acc[i] += coef * col[i];
    if (iabs(acc[i]) > out) out = iabs(acc[i]);
  }
  return out;
}

std::int64_t i32_axpy_sumabs(std::int32_t* acc, const std::int32_t* col, std::int32_t coef, std::size_t n) {
  const __m256i c = _mm256_set1_epi32(coef);
  __m256i sum = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col + i));
    a = _mm256_add_epi32(a, _mm256_mullo_epi32(c, x));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), a);
    sum = add_widened(sum, _mm256_abs_epi32(a));
  }
  std::int64_t out = hsum_epi64(sum);
  for (; i < n; ++i) {
    acc[i] += coef * col[i];
    out += iabs(acc[i]);
  }
  return out;
}

std::int32_t i32_maxabs(const std::int32_t* v, std::size_t n) {
  __m256i best = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    best = _mm256_max_epi32(best, _mm256_abs_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i))));
  std::int32_t out = hmax_epi32(best);
  for (; i < n; ++i)
    if (iabs(v[i]) > out) out = iabs(v[i]);
  return out;
}

std::int64_t i32_sumabs(const std::int32_t* v, std::size_t n) {
  __m256i sum = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    sum = add_widened(sum, _mm256_abs_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i))));
  std::int64_t out = hsum_epi64(sum);
  for (; i < n; ++i) out += iabs(v[i]);
  return out;
}

void f64_axpy(double* acc, const double* col, double coef, std::size_t n) {
  const __m256d c = _mm256_set1_pd(coef);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(c, _mm256_loadu_pd(col + i));
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), prod));
  }
  for (; i < n; ++i) {
    const double prod = coef * col[i];
    acc[i] = acc[i] + prod;
  }
}

double f64_maxabs(const double* v, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) best = _mm256_max_pd(best, _mm256_andnot_pd(sign, _mm256_loadu_pd(v + i)));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = lanes[0];
  for (int t = 1; t < 4; ++t)
    if (lanes[t] > out) out = lanes[t];
  for (; i < n; ++i)
    if (std::fabs(v[i]) > out) out = std::fabs(v[i]);
  return out;
}

constexpr KernelTable kAvx2{
    Isa::Avx2, "avx2", i32_axpy, i32_axpy_maxabs, i32_axpy_sumabs, i32_maxabs, i32_sumabs, f64_axpy, f64_maxabs,
};

}  // namespace

const KernelTable* avx2_table_impl() noexcept { return &kAvx2; }

}  // namespace disclab::kernels
