#include <doctest.h>

#include <cmath>
#include <random>

#include "disclab/constructions.hpp"
#include "disclab/error.hpp"
#include "disclab/exact.hpp"
#include "disclab/vcdim.hpp"
#include "oracles.hpp"

using namespace disclab;

TEST_CASE("is_shattered") {
  const auto w = is_shattered(power_matrix(2), {0, 1});
  REQUIRE(w);
  CHECK(w->pattern_rows == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(is_shattered(haar_pm(1), {0, 1}).has_value());
  CHECK_FALSE(is_shattered(IntMatrix{{1, 1}, {1, 1}}, {0}).has_value());
  CHECK_THROWS_AS(is_shattered(haar(1), {0}), Error);
  Limits tight;
  tight.vc_cols = 1;
  CHECK_THROWS_AS(is_shattered(power_matrix(2), {0, 1}, tight), Error);
}

TEST_CASE("vc_dimension") {
  for (unsigned N = 1; N <= 5; ++N) CHECK(vc_dimension(power_matrix(N)).d == N);
  CHECK(vc_dimension(haar_pm(1)).d == 2);
  const auto z = vc_dimension(IntMatrix(3, 3));
  CHECK(z.d == 0);
  CHECK(z.witness.cols.empty());

  std::mt19937_64 g(4);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t m = 1 + g() % 10, n = 1 + g() % 6;
    const auto a = oracle::random_matrix(g, m, n, 0, 1);
    const auto r = vc_dimension(a);
    CHECK(r.d == oracle::brute_vc(a));
    // the witness realizes every pattern
    REQUIRE(r.witness.pattern_rows.size() == (std::size_t{1} << r.d));
    for (std::size_t p = 0; p < r.witness.pattern_rows.size(); ++p) {
      std::size_t got = 0;
      for (std::size_t t = 0; t < r.d; ++t)
        if (a(r.witness.pattern_rows[p], r.witness.cols[t]) != 0) got |= std::size_t{1} << t;
      CHECK(got == p);
    }
    // Sauer-Shelah: 2^d <= number of distinct rows
    CHECK((std::size_t{1} << r.d) <= m);
  }
}

TEST_CASE("vc_dimension under the Kronecker product with a power matrix") {
  // P_N (x) B contains every 0/1 pattern of B-rows times a subset, so d grows by at least N
  for (unsigned N = 1; N <= 2; ++N) {
    const auto b = IntMatrix{{1, 0}, {0, 1}};
    CHECK(vc_dimension(kronecker(power_matrix(N), b)).d >= N);
  }
}

TEST_CASE("random_coloring_stats") {
  const auto s = random_coloring_stats(IntMatrix{{1}}, 50, 9);
  CHECK(s.mean == 1.0);
  CHECK(s.max == 1);
  CHECK(s.stddev == 0.0);
  // a single 1 entry never shows pattern 0, so nothing is shattered
  CHECK(s.d == std::optional<std::size_t>{0});
  CHECK_FALSE(s.normalized_ratio.has_value());

  const auto a = random_coloring_stats(haar_pm(2), 1000, 7);
  const auto b = random_coloring_stats(haar_pm(2), 1000, 7);
  CHECK(a.mean == b.mean);
  CHECK(a.max == b.max);
  CHECK(a.stddev == b.stddev);
  CHECK(a.mean <= a.max.get_d());
  CHECK(a.mean >= a.max.get_d() - 3 * a.stddev - 3.0);
  CHECK(a.d == std::optional<std::size_t>{2});
  // regression values pinned at first build
  CHECK(a.mean == doctest::Approx(2.234).epsilon(1e-12));
  CHECK(a.max == 3);
  CHECK(a.stddev == doctest::Approx(0.42358402168096876).epsilon(1e-12));

  // threads do not change the draws
  Limits par;
  par.threads = 4;
  const auto c = random_coloring_stats(haar_pm(2), 1000, 7, par);
  CHECK(c.mean == a.mean);
  CHECK(c.stddev == a.stddev);

  const auto signed_in = random_coloring_stats(haar(2), 10, 1);
  CHECK_FALSE(signed_in.d.has_value());
  CHECK_FALSE(signed_in.normalized_ratio.has_value());
  CHECK(random_coloring_stats(IntMatrix{{1, 1}, {1, 1}}, 10, 1).constant_input);
}

TEST_CASE("random_coloring_stats mean matches an independent replay") {
  // max |row . x| on haar(1) is always 2
  const auto s = random_coloring_stats(haar(1), 200, 3);
  CHECK(s.mean == 2.0);
  CHECK(s.max == 2);
  CHECK(s.stddev == 0.0);
}
