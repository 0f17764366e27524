#pragma once

// Data-parallel inner loops used by the exhaustive colouring searches, the
// random-colouring experiment and the Monte-Carlo volume estimator.
//
// Every kernel has a scalar reference implementation; ISA-specific variants
// must produce bit-identical results (integer kernels exactly, the f64 kernels
// because each lane performs the same single fused-free operation sequence as
// the scalar loop). The active table is chosen once at runtime from CPUID and
// can be pinned with DISCLAB_SIMD=scalar|avx2 or force_isa().

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace disclab::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  const char* name;

  // acc[i] += coef * col[i]
  void (*i32_axpy)(std::int32_t* acc, const std::int32_t* col, std::int32_t coef, std::size_t n);
  // acc[i] += coef * col[i]; returns max_i |acc[i]| (0 for n == 0)
  std::int32_t (*i32_axpy_maxabs)(std::int32_t* acc, const std::int32_t* col, std::int32_t coef, std::size_t n);
  // acc[i] += coef * col[i]; returns sum_i |acc[i]|
  std::int64_t (*i32_axpy_sumabs)(std::int32_t* acc, const std::int32_t* col, std::int32_t coef, std::size_t n);
  std::int32_t (*i32_maxabs)(const std::int32_t* v, std::size_t n);
  std::int64_t (*i32_sumabs)(const std::int32_t* v, std::size_t n);

  // acc[i] += coef * col[i] (separate multiply and add, no FMA contraction)
  void (*f64_axpy)(double* acc, const double* col, double coef, std::size_t n);
  double (*f64_maxabs)(const double* v, std::size_t n);
};

const KernelTable& scalar_table() noexcept;
// nullptr when the variant was not compiled in.
const KernelTable* avx2_table() noexcept;

bool cpu_has_avx2() noexcept;

// Tables usable on this machine, scalar first.
std::vector<const KernelTable*> available_tables();

const KernelTable& active() noexcept;
// Pins the active table (nullopt restores automatic selection). Not thread-safe
// with respect to concurrent kernel users; intended for tests and the CLI.
void force_isa(std::optional<Isa> isa);

}  // namespace disclab::kernels
