#include <doctest.h>

#include <cmath>

#include "disclab/constructions.hpp"
#include "disclab/error.hpp"
#include "disclab/vollb.hpp"

using namespace disclab;

namespace {

const IntMatrix kHexagon{{1, 0}, {0, 1}, {1, 1}};

}  // namespace

TEST_CASE("bounding_box") {
  auto b = bounding_box(IntMatrix::identity(2), {0, 1});
  CHECK(b.radii == std::vector<BigRational>{BigRational(1, 1), BigRational(1, 1)});
  CHECK(b.det == 1);
  b = bounding_box(kHexagon, {0, 1});
  CHECK(b.basis_rows == std::vector<std::size_t>{0, 1});
  CHECK(b.radii == std::vector<BigRational>{BigRational(1, 1), BigRational(1, 1)});
  b = bounding_box(IntMatrix{{2, 1}, {0, 3}}, {0, 1});
  // B^-1 = [[1/2, -1/6], [0, 1/3]]
  CHECK(b.radii == std::vector<BigRational>{BigRational(2, 3), BigRational(1, 3)});
  try {
    bounding_box(IntMatrix{{1, 1}}, {0, 1});
    FAIL("expected RankDeficient");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RankDeficient);
  }
}

TEST_CASE("estimate_volume") {
  auto e = estimate_volume(IntMatrix::identity(2), {0, 1}, 200'000, 3);
  CHECK(e.volume == 4.0);  // the box is the body
  CHECK(e.accepted == e.samples);
  e = estimate_volume(kHexagon, {0, 1}, 200'000, 3);
  CHECK(std::fabs(e.volume - 3.0) <= 3 * e.std_error + 1e-12);
  CHECK(e.std_error > 0.0);
  CHECK(e.inv_root == doctest::Approx(1.0 / std::sqrt(e.volume)));
  const auto again = estimate_volume(kHexagon, {0, 1}, 200'000, 3);
  CHECK(again.volume == e.volume);
  Limits par;
  par.threads = 3;
  CHECK(estimate_volume(kHexagon, {0, 1}, 200'000, 3, par).volume == e.volume);

  const IntMatrix a{{3, 1}, {-2, 0}, {1, 5}};
  for (std::size_t c = 0; c < 2; ++c) {
    const double want = c == 0 ? 2.0 / 3.0 : 2.0 / 5.0;
    const auto one = estimate_volume(a, {c}, 10'000, 1);
    CHECK(std::fabs(one.volume - want) <= 3 * one.std_error + 1e-12);
  }
  CHECK_THROWS_AS(estimate_volume(IntMatrix{{1, 1}}, {0, 1}, 100, 1), Error);
}

TEST_CASE("vollb_estimate") {
  auto r = vollb_estimate(IntMatrix::identity(2), 2, 100'000, 1);
  CHECK(r.value == doctest::Approx(0.5).epsilon(0.05));
  CHECK(r.table.size() == 3);
  r = vollb_estimate(IntMatrix{{2}}, 1, 10'000, 1);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.argmax == std::vector<std::size_t>{0});

  const auto pm = vollb_estimate(haar_pm(1), 2, 100'000, 1);
  const auto pm2 = vollb_estimate(haar_pm(1), 2, 100'000, 1);
  CHECK(pm.value == pm2.value);
  // k = 1 rows: each column of haar_pm(1) has max entry 1, interval length 2
  for (const auto& e : pm.table)
    if (e.k == 1) CHECK(e.inv_root == doctest::Approx(0.5));
  CHECK(pm.value >= 0.5);
  // K is the hexagon of area 3, so the k = 2 term is 1/sqrt(3)
  CHECK(pm.argmax == std::vector<std::size_t>{0, 1});
  CHECK(pm.value == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(0.05));
  // regression value pinned at first build
  CHECK(pm.value == doctest::Approx(0.57681216217112952).epsilon(1e-12));

  Limits tight;
  tight.subset_budget = 2;
  CHECK_THROWS_AS(vollb_estimate(IntMatrix::identity(3), 3, 100, 1, tight), Error);
}
