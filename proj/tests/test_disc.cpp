#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "disclab/constructions.hpp"
#include "disclab/disc.hpp"
#include "disclab/error.hpp"
#include "disclab/exact.hpp"
#include "oracles.hpp"

using namespace disclab;

namespace {

Coloring from_mask(std::size_t n, std::uint64_t mask) {
  Coloring x;
  x.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) x.values[j] = ((mask >> j) & 1u) ? -1 : 1;
  return x;
}

// Lexicographically first optimal colouring with x_0 = +1, by enumeration.
Coloring brute_witness(const IntMatrix& a) {
  const std::size_t n = a.cols();
  BigInt best = -1;
  Coloring out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); mask += 2) {
    const auto x = from_mask(n, mask);
    const auto v = oracle::inf_of(oracle::products(a, mask));
    if (best < 0 || v < best || (v == best && x.values < out.values)) {
      best = v;
      out = x;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("disc_of_coloring examples") {
  CHECK(std::get<BigInt>(disc_of_coloring(haar(1), Coloring{{1, 1}}, Norm::inf())) == 2);
  CHECK(std::get<BigRational>(disc_of_coloring(haar(2), Coloring{{1, 1, 1, 1}}, Norm::one())) == BigRational(3, 2));
  const double p2 = std::get<double>(disc_of_coloring(haar(2), Coloring{{1, 1, 1, 1}}, Norm::lp(2)));
  CHECK(p2 == doctest::Approx(std::sqrt(12.0 / 4.0)).epsilon(1e-12));
  CHECK_THROWS_AS(disc_of_coloring(haar(1), Coloring{{1}}, Norm::inf()), Error);
  CHECK_THROWS_AS(disc_of_coloring(haar(1), Coloring{{1, 0}}, Norm::inf()), Error);
  CHECK_THROWS_AS(Norm::lp(0.5), Error);
}

TEST_CASE("disc_exact examples") {
  CHECK(std::get<BigInt>(disc_exact(haar(1), Norm::inf()).value) == 2);
  CHECK(std::get<BigInt>(disc_exact(haar(2), Norm::inf()).value) == 3);
  CHECK(std::get<BigRational>(disc_exact(haar(2), Norm::one()).value) == BigRational(3, 2));
  for (unsigned k = 1; k <= 3; ++k) {
    CHECK(std::get<BigRational>(disc_exact(haar(k), Norm::one()).value) == disc1_closed(k));
    CHECK(std::get<BigInt>(disc_exact(haar(k), Norm::inf()).value) == k + 1);
  }
  CHECK(std::get<BigInt>(disc_exact(haar(4), Norm::inf()).value) == 5);
  Limits tight;
  tight.exhaustive_cols = 3;
  try {
    disc_exact(haar(2), Norm::inf(), tight);
    FAIL("expected SearchSpaceTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchSpaceTooLarge);
  }
}

TEST_CASE("disc_exact matches brute force on random matrices") {
  std::mt19937_64 g(2024);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t m = 1 + g() % 6, n = 1 + g() % 7;
    const auto a = oracle::random_matrix(g, m, n, -3, 3);
    const auto want_inf = oracle::brute_disc_inf(a);
    const auto want_w = brute_witness(a);
    for (auto s : {DiscStrategy::Auto, DiscStrategy::GrayCode, DiscStrategy::BranchAndBound}) {
      const auto r = disc_exact(a, Norm::inf(), {}, s);
      CHECK(std::get<BigInt>(r.value) == want_inf);
      CHECK(r.witness == want_w);
      CHECK(std::get<BigInt>(disc_of_coloring(a, r.witness, Norm::inf())) == want_inf);
    }
    const auto r1 = disc_exact(a, Norm::one());
    CHECK(std::get<BigRational>(r1.value) == BigRational(oracle::brute_disc_l1(a), BigInt(static_cast<long>(m))));
    for (double p : {1.5, 2.0, 3.0}) {
      const auto rp = disc_exact(a, Norm::lp(p));
      CHECK(std::get<double>(rp.value) == doctest::Approx(oracle::brute_disc_p(a, p)).epsilon(1e-12));
    }
  }
}

TEST_CASE("disc_exact with entries beyond the int32 path") {
  std::mt19937_64 g(99);
  for (int iter = 0; iter < 20; ++iter) {
    auto a = oracle::random_matrix(g, 3, 5, -3, 3);
    BigInt huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 10, 30);
    a(0, 0) = huge * static_cast<long>(1 + iter);
    const auto want = oracle::brute_disc_inf(a);
    CHECK(std::get<BigInt>(disc_exact(a, Norm::inf()).value) == want);
    CHECK(disc_exact(a, Norm::inf()).witness == brute_witness(a));
    CHECK(std::get<BigRational>(disc_exact(a, Norm::one()).value) == BigRational(oracle::brute_disc_l1(a), BigInt(3)));
  }
}

TEST_CASE("disc_exact is invariant under threads and symmetric in sign") {
  std::mt19937_64 g(5);
  for (int iter = 0; iter < 20; ++iter) {
    const auto a = oracle::random_matrix(g, 5, 10, -2, 2);
    Limits par;
    par.threads = 4;
    for (auto s : {DiscStrategy::GrayCode, DiscStrategy::BranchAndBound}) {
      const auto r1 = disc_exact(a, Norm::inf(), {}, s);
      const auto r4 = disc_exact(a, Norm::inf(), par, s);
      CHECK(std::get<BigInt>(r1.value) == std::get<BigInt>(r4.value));
      CHECK(r1.witness == r4.witness);
    }
    CHECK(std::get<BigRational>(disc_exact(a, Norm::one()).value) ==
          std::get<BigRational>(disc_exact(a, Norm::one(), par).value));
    CHECK(disc_exact(a, Norm::one()).witness == disc_exact(a, Norm::one(), par).witness);
  }
}

TEST_CASE("disc is monotone in the norm") {
  std::mt19937_64 g(17);
  for (int iter = 0; iter < 40; ++iter) {
    const auto a = oracle::random_matrix(g, 4, 6, -2, 2);
    const double one = to_double(disc_exact(a, Norm::one()).value);
    const double two = to_double(disc_exact(a, Norm::lp(2)).value);
    const double inf = to_double(disc_exact(a, Norm::inf()).value);
    CHECK(one <= two + 1e-12);
    CHECK(two <= inf + 1e-12);
  }
}

TEST_CASE("herdisc_exact") {
  const auto h1 = herdisc_exact(haar(1));
  CHECK(h1.value == 2);
  CHECK(h1.witness.cols == std::vector<std::size_t>{0, 1});
  CHECK(herdisc_exact(power_matrix(2)).value == 1);
  CHECK(herdisc_exact(IntMatrix(2, 2)).value == 0);
  std::mt19937_64 g(31);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t m = 1 + g() % 5, n = 1 + g() % 5;
    const auto a = oracle::random_matrix(g, m, n, -1, 1);
    const auto h = herdisc_exact(a);
    CHECK(h.value == oracle::brute_herdisc(a));
    if (h.value > 0) {
      const auto sub = oracle::columns(a, h.witness.cols);
      CHECK(std::get<BigInt>(disc_of_coloring(sub, h.witness_coloring, Norm::inf())) == h.value);
      CHECK(oracle::brute_disc_inf(sub) == h.value);
    }
    CHECK(h.value >= oracle::brute_disc_inf(a));
  }
  Limits tight;
  tight.herdisc_cols = 2;
  CHECK_THROWS_AS(herdisc_exact(haar(2), tight), Error);
}

TEST_CASE("adversarial_row") {
  const auto t1 = haar_tree(1);
  auto r = adversarial_row(t1, Coloring{{1, 1}});
  CHECK(r.row_index == 0);
  CHECK(r.signed_sum == 2);
  const auto t2 = haar_tree(2);
  r = adversarial_row(t2, Coloring{{1, -1, 1, -1}});
  CHECK(r.row_index == 3);
  CHECK(r.signed_sum == 3);
  for (unsigned k = 1; k <= 4; ++k) {
    const auto t = haar_tree(k);
    const auto h = haar(k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.cols()); ++mask) {
      const auto x = from_mask(h.cols(), mask);
      const auto a = adversarial_row(t, x);
      const auto prod = oracle::products(h, mask);
      CHECK(abs(a.signed_sum) == k + 1);
      CHECK(prod[a.row_index] == a.signed_sum);
      CHECK(oracle::inf_of(prod) == k + 1);
    }
  }
}

TEST_CASE("disc amplification") {
  auto c = verify_disc_amplification(haar(1), 1);
  CHECK(c.lhs == 2);
  CHECK(c.rhs == BigRational(1, 2));
  CHECK(c.holds);
  c = verify_disc_amplification(haar(1), 2);
  CHECK(c.rhs == BigRational(1, 1));
  CHECK(c.lhs >= 1);
  CHECK(c.holds);
  CHECK(c.lhs == oracle::brute_disc_inf(build_kron_instance(2, 1, Family::Haar)));
  c = verify_disc_amplification(IntMatrix{{1}}, 2);
  CHECK(c.rhs == BigRational(1, 1));
  // P_2 (x) [1] = P_2, whose best colouring (+1, -1) leaves max |row sum| 1
  CHECK(c.lhs == 1);
  CHECK(c.holds);
  c = verify_disc_amplification(haar_pm(1), 1);
  CHECK(c.holds);
}

TEST_CASE("multiset invariance") {
  CHECK(multiset_invariance_check(1, MultisetMode::all()).holds);
  const auto c2 = multiset_invariance_check(2, MultisetMode::all());
  CHECK(c2.holds);
  CHECK(c2.colorings_checked == 8);
  const auto c3 = multiset_invariance_check(3, MultisetMode::all());
  CHECK(c3.holds);
  CHECK(c3.colorings_checked == 128);
  const auto s = multiset_invariance_check(4, MultisetMode::sampled(500, 3));
  CHECK(s.holds);
  CHECK(s.colorings_checked == 500);
  CHECK_THROWS_AS(multiset_invariance_check(0, MultisetMode::all()), Error);
}

TEST_CASE("pm_sos_check") {
  for (unsigned k = 0; k <= 2; ++k) {
    const auto c = pm_sos_check(k);
    CHECK(c.holds);
    CHECK(BigRational(c.disc_pm) >= c.half_disc);
  }
  CHECK(pm_sos_check(0).disc_pm == 1);
  CHECK(pm_sos_check(1).disc_pm >= 1);
  CHECK(pm_sos_check(2).disc_pm >= 2);
}
