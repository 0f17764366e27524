#include <atomic>
#include <cstdlib>
#include <cstring>

#include "disclab/kernels/kernels.hpp"

namespace disclab::kernels {

#if defined(DISCLAB_HAVE_AVX2)
const KernelTable* avx2_table_impl() noexcept;
#endif

const KernelTable* avx2_table() noexcept {
#if defined(DISCLAB_HAVE_AVX2)
  return avx2_table_impl();
#else
  return nullptr;
#endif
}

bool cpu_has_avx2() noexcept {
#if defined(DISCLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::vector<const KernelTable*> available_tables() {
  std::vector<const KernelTable*> out{&scalar_table()};
  if (avx2_table() && cpu_has_avx2()) out.push_back(avx2_table());
  return out;
}

namespace {

const KernelTable* auto_select() noexcept {
  const char* env = std::getenv("DISCLAB_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return &scalar_table();
  if (avx2_table() && cpu_has_avx2()) return avx2_table();
  return &scalar_table();
}

std::atomic<const KernelTable*> g_forced{nullptr};

}  // namespace

const KernelTable& active() noexcept {
  if (const KernelTable* forced = g_forced.load(std::memory_order_acquire)) return *forced;
  static const KernelTable* selected = auto_select();
  return *selected;
}

void force_isa(std::optional<Isa> isa) {
  if (!isa) {
    g_forced.store(nullptr, std::memory_order_release);
    return;
  }
  if (*isa == Isa::Avx2 && avx2_table() && cpu_has_avx2()) {
    g_forced.store(avx2_table(), std::memory_order_release);
  } else {
    g_forced.store(&scalar_table(), std::memory_order_release);
  }
}

}  // namespace disclab::kernels
