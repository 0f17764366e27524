#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "disclab/kernels/kernels.hpp"

using namespace disclab::kernels;

TEST_CASE("every available kernel table matches the scalar reference") {
  const auto& ref = scalar_table();
  const auto tables = available_tables();
  REQUIRE(!tables.empty());
  CHECK(tables.front()->isa == Isa::Scalar);
  if (cpu_has_avx2() && avx2_table()) CHECK(tables.size() == 2);

  std::mt19937_64 g(3);
  std::uniform_int_distribution<std::int32_t> iv(-1000, 1000);
  std::uniform_real_distribution<double> dv(-3.0, 3.0);
  for (const auto* t : tables) {
    CAPTURE(t->name);
    for (std::size_t n = 0; n <= 67; ++n) {
      std::vector<std::int32_t> acc(n), col(n);
      for (auto& x : acc) x = iv(g);
      for (auto& x : col) x = iv(g);
      for (std::int32_t coef : {-2, -1, 1, 2, 7}) {
        auto a1 = acc, a2 = acc;
        ref.i32_axpy(a1.data(), col.data(), coef, n);
        t->i32_axpy(a2.data(), col.data(), coef, n);
        CHECK(a1 == a2);

        a1 = acc, a2 = acc;
        CHECK(ref.i32_axpy_maxabs(a1.data(), col.data(), coef, n) == t->i32_axpy_maxabs(a2.data(), col.data(), coef, n));
        CHECK(a1 == a2);

        a1 = acc, a2 = acc;
        CHECK(ref.i32_axpy_sumabs(a1.data(), col.data(), coef, n) == t->i32_axpy_sumabs(a2.data(), col.data(), coef, n));
        CHECK(a1 == a2);
      }
      CHECK(ref.i32_maxabs(acc.data(), n) == t->i32_maxabs(acc.data(), n));
      CHECK(ref.i32_sumabs(acc.data(), n) == t->i32_sumabs(acc.data(), n));

      std::vector<double> facc(n), fcol(n);
      for (auto& x : facc) x = dv(g);
      for (auto& x : fcol) x = dv(g);
      auto f1 = facc, f2 = facc;
      ref.f64_axpy(f1.data(), fcol.data(), 0.37, n);
      t->f64_axpy(f2.data(), fcol.data(), 0.37, n);
      CHECK(f1 == f2);
      CHECK(ref.f64_maxabs(f1.data(), n) == t->f64_maxabs(f2.data(), n));
    }
  }
}

TEST_CASE("force_isa pins and restores the active table") {
  force_isa(Isa::Scalar);
  CHECK(active().isa == Isa::Scalar);
  force_isa(std::nullopt);
  const char* env = std::getenv("DISCLAB_SIMD");
  const bool env_scalar = env && std::string(env) == "scalar";
  if (cpu_has_avx2() && avx2_table() && !env_scalar) CHECK(active().isa == Isa::Avx2);
  if (env_scalar) CHECK(active().isa == Isa::Scalar);
}
