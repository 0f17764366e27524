#include <doctest.h>

#include "disclab/constructions.hpp"
#include "disclab/error.hpp"
#include "disclab/haar_tree.hpp"
#include "disclab/json_io.hpp"
#include "disclab/vecdisc.hpp"

using namespace disclab;

TEST_CASE("greedy_heavy_path examples") {
  const auto t = haar_tree(1);
  VectorAssignment par{2, {{1, 0}, {1, 0}}};
  auto c = greedy_heavy_path(t, par);
  CHECK(c.row_index == 0);
  CHECK(c.accumulated == std::vector<double>{2, 0});
  CHECK(c.sq_norm == 4.0);
  CHECK(c.partial_sq_norm == 1.0);
  VectorAssignment orth{2, {{1, 0}, {0, 1}}};
  c = greedy_heavy_path(t, orth);
  CHECK(c.sq_norm == 2.0);
  VectorAssignment anti{2, {{1, 0}, {-1, 0}}};
  c = greedy_heavy_path(t, anti);
  CHECK(c.row_index == 1);
  CHECK(c.sq_norm == 4.0);
}

TEST_CASE("greedy_heavy_path certifies depth + 1") {
  for (unsigned k = 1; k <= 5; ++k) {
    const auto t = haar_tree(k);
    const auto h = haar(k);
    for (std::uint64_t i = 0; i < 100; ++i) {
      const auto va = random_unit_assignment(t.columns(), 8, 11, i);
      const auto c = greedy_heavy_path(t, va);
      CHECK(c.sq_norm >= static_cast<double>(k + 1) - 1e-6);
      CHECK(c.path.size() == k + 1);
      const double rn = vecdisc_row_norm(h, va, c.row_index);
      CHECK(rn * rn == doctest::Approx(c.sq_norm).epsilon(1e-9));
    }
  }
}

TEST_CASE("random_unit_assignment") {
  const auto a = random_unit_assignment(5, 3, 1, 0);
  const auto b = random_unit_assignment(5, 3, 1, 0);
  const auto c = random_unit_assignment(5, 3, 1, 1);
  CHECK(a.vectors == b.vectors);
  CHECK(a.vectors != c.vectors);
  CHECK_NOTHROW(validate(a, 5));
  CHECK_THROWS_AS(validate(a, 4), Error);
  CHECK_THROWS_AS(random_unit_assignment(2, 0, 1), Error);
  try {
    validate(VectorAssignment{2, {{1, 1}}}, 1);
    FAIL("expected NonUnitVector");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUnitVector);
  }
}

TEST_CASE("vecdisc_row_norm") {
  VectorAssignment e1{2, {{1, 0}, {1, 0}}};
  CHECK(vecdisc_row_norm(IntMatrix(1, 2), e1, 0) == 0.0);
  CHECK(vecdisc_row_norm(haar(1), e1, 0) == 2.0);
  CHECK(vecdisc_row_norm(haar(1), e1, 1) == 0.0);
  CHECK_THROWS_AS(vecdisc_row_norm(haar(1), e1, 2), Error);
}

TEST_CASE("assignment JSON round trip") {
  const auto a = random_unit_assignment(4, 3, 5);
  Json j{{"dim", a.dim}, {"vectors", a.vectors}};
  const auto b = assignment_from_json(j);
  CHECK(b.dim == a.dim);
  CHECK(b.vectors == a.vectors);
}
