#include "disclab/claims.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "common/format.hpp"
#include "disclab/constructions.hpp"
#include "disclab/detlb.hpp"
#include "disclab/disc.hpp"
#include "disclab/error.hpp"
#include "disclab/haar_tree.hpp"
#include "disclab/rng.hpp"
#include "disclab/vecdisc.hpp"

namespace disclab {

const char* to_string(ClaimStatus s) noexcept {
  switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::Info: return "INFO";
  }
  return "?";
}

bool ClaimsReport::all_pass() const {
  for (const auto& r : rows)
    if (r.status == ClaimStatus::Fail) return false;
  return true;
}

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

ClaimStatus pass_if(bool ok) { return ok ? ClaimStatus::Pass : ClaimStatus::Fail; }

struct Pair {
  std::string name;
  IntMatrix a;
  unsigned N;
};

std::vector<Pair> amplification_pairs(unsigned max_k, const Limits& limits) {
  std::vector<Pair> pairs{{"A_1/N=1", haar(1, limits), 1}, {"A_1/N=2", haar(1, limits), 2}, {"A_1^pm/N=1", haar_pm(1, limits), 1}};
  for (unsigned k = 2; k <= max_k; ++k) pairs.push_back({"A_" + std::to_string(k) + "/N=1", haar(k, limits), 1});
  return pairs;
}

ClaimRow det_haar(const Limits& limits) {
  std::vector<std::string> lhs, rhs;
  bool ok = true;
  for (unsigned k = 1; k <= 4; ++k) {
    const BigInt d = abs(det_exact(haar(k, limits)));
    BigInt want;
    mpz_ui_pow_ui(want.get_mpz_t(), 2, (1ul << k) - 1);
    ok = ok && d == want;
    lhs.push_back(to_string(d));
    rhs.push_back(to_string(want));
  }
  return {"det-haar", "|det A_k| = 2^(2^k-1), k<=4", join(lhs), join(rhs), pass_if(ok)};
}

ClaimRow disc1(unsigned max_k, const Limits& limits) {
  std::vector<std::string> lhs, rhs;
  bool ok = true;
  for (unsigned k = 1; k <= max_k; ++k) {
    const auto got = std::get<BigRational>(disc_exact(haar(k, limits), Norm::one(), limits).value);
    const auto want = disc1_closed(k);
    ok = ok && got == want;
    lhs.push_back(got.to_string());
    rhs.push_back(want.to_string());
  }
  return {"disc1-closed", "disc_1(A_k) = (k+1)/2^k C(k,floor((k+1)/2))", join(lhs), join(rhs), pass_if(ok)};
}

ClaimRow detlb_le_2(unsigned max_k, const Limits& limits) {
  std::vector<std::string> lhs;
  bool ok = true;
  for (unsigned k = 1; k <= max_k; ++k) {
    const auto c = detlb_exact(haar(k, limits), std::nullopt, limits);
    ok = ok && !c.partial && root_power_compare(c.det, c.order, BigInt(2), 1) != std::strong_ordering::greater;
    lhs.push_back(detail::format_fixed(c.value_float, 6));
  }
  return {"detlb-haar-le-2", "detlb(A_k) <= 2", join(lhs), "2", pass_if(ok)};
}

ClaimRow tum_pm(unsigned max_k, const Limits& limits) {
  std::size_t tum = 0, total = 0;
  for (unsigned k = 1; k <= max_k; ++k) {
    for (const auto& m : {haar_pos(k, limits), haar_neg(k, limits)}) {
      ++total;
      if (is_tum(m, limits).tum) ++tum;
    }
  }
  return {"tum-pm", "A_k^+ and A_k^- are TUM", std::to_string(tum) + " TUM", std::to_string(total) + " matrices",
          pass_if(tum == total)};
}

ClaimRow permute(unsigned max_k, const Limits& limits) {
  std::uint64_t checked = 0;
  bool ok = true;
  for (unsigned k = 1; k <= max_k; ++k) {
    const auto r = multiset_invariance_check(k, MultisetMode::all(), limits);
    ok = ok && r.holds;
    checked += r.colorings_checked;
  }
  return {"permute", "sorted(~A_k x) = sorted(~A_k 1) for all x", std::to_string(checked) + " colorings",
          ok ? "all equal" : "mismatch", pass_if(ok)};
}

ClaimRow identity() {
  bool ok = true;
  for (unsigned k = 1; k <= 20; ++k) ok = ok && binomial_abs_identity_check(k).equal;
  const auto last = binomial_abs_identity_check(20);
  return {"identity", "sum_l C(k,l)|k-2l| = 2k C(k-1,floor(k/2)), k<=20", "k=20: " + to_string(last.lhs),
          "k=20: " + to_string(last.rhs), pass_if(ok)};
}

ClaimRow disc_amp(unsigned max_k, const Limits& limits) {
  std::vector<std::string> lhs, rhs;
  bool ok = true;
  for (const auto& p : amplification_pairs(max_k, limits)) {
    const auto r = verify_disc_amplification(p.a, p.N, limits);
    ok = ok && r.holds;
    lhs.push_back(p.name + ":" + to_string(r.lhs));
    rhs.push_back(r.rhs.to_string());
  }
  return {"disc-amp", "disc(P_N (x) A) >= N disc_1(A)/2", join(lhs, " "), join(rhs, " "), pass_if(ok)};
}

ClaimRow detlb_amp(unsigned max_k, const Limits& limits) {
  std::vector<std::string> lhs, rhs;
  bool ok = true;
  for (const auto& p : amplification_pairs(max_k, limits)) {
    const auto r = verify_detlb_amplification(p.a, p.N, limits);
    ok = ok && r.holds;
    lhs.push_back(p.name + ":" + detail::format_fixed(r.lhs, 6));
    rhs.push_back(detail::format_fixed(r.rhs, 6));
  }
  return {"detlb-amp", "detlb(P_N (x) A) <= sqrt(eN) detlb(A)", join(lhs, " "), join(rhs, " "), pass_if(ok)};
}

ClaimRow lsv(std::uint64_t seed, const Limits& limits) {
  constexpr int kInstances = 200;
  int held = 0;
  for (int i = 0; i < kInstances; ++i) {
    KeyedRng rng{seed, 0x15u, static_cast<std::uint64_t>(i)};
    const std::size_t m = 1 + rng.next() % 5, n = 1 + rng.next() % 5;
    std::vector<BigInt> data(m * n);
    for (auto& v : data) v = static_cast<long>(rng.next() & 1u);
    if (lsv_check(IntMatrix(m, n, std::move(data)), limits).holds) ++held;
  }
  return {"lsv", "detlb(A) <= 2 herdisc(A), random 0/1 up to 5x5", std::to_string(held) + " hold",
          std::to_string(kInstances) + " instances", pass_if(held == kInstances)};
}

ClaimRow sos(unsigned max_k, const Limits& limits) {
  std::vector<std::string> lhs, rhs;
  bool ok = true;
  for (unsigned k = 1; k <= max_k; ++k) {
    const auto r = pm_sos_check(k, limits);
    ok = ok && r.holds;
    lhs.push_back(to_string(r.disc_pm));
    rhs.push_back(r.half_disc.to_string());
  }
  return {"sos", "disc(A_k^pm) >= disc(A_k)/2", join(lhs), join(rhs), pass_if(ok)};
}

ClaimRow hadamard_det(const Limits& limits) {
  std::vector<std::string> lhs, rhs;
  bool ok = true;
  for (std::size_t n : {1, 2, 4, 8}) {
    const BigInt d = abs(det_exact(hadamard01(n, limits)));
    // |det| >= n^(n/2) / 2^n  <=>  (|det| 2^n)^2 >= n^n
    BigInt scaled = d, nn;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), n);
    mpz_ui_pow_ui(nn.get_mpz_t(), n, n);
    ok = ok && scaled * scaled >= nn && d == hadamard01_abs_det(n);
    lhs.push_back(to_string(d));
    rhs.push_back(detail::format_fixed(std::pow(2.0, -static_cast<double>(n)) * std::pow(n, n / 2.0), 4));
  }
  return {"hadamard01-det", "|det H~_n| >= 2^-n n^(n/2), n in {1,2,4,8}", join(lhs), join(rhs), pass_if(ok)};
}

ClaimRow vecdisc(unsigned max_k, std::uint64_t seed, const Limits& limits) {
  constexpr int kAssignments = 100;
  constexpr std::size_t kDim = 8;
  std::vector<std::string> lhs, rhs;
  bool ok = true;
  for (unsigned k = 1; k <= max_k; ++k) {
    const auto tree = haar_tree(k, limits);
    double worst = INFINITY;
    for (int i = 0; i < kAssignments; ++i) {
      const auto va = random_unit_assignment(tree.columns(), kDim, seed, std::uint64_t{k} * 1'000'000u + i);
      const auto c = greedy_heavy_path(tree, va);
      ok = ok && c.sq_norm >= k + 1 - 1e-6 && c.partial_sq_norm >= k - 1e-6;
      worst = std::min(worst, c.sq_norm);
    }
    lhs.push_back(detail::format_fixed(worst, 6));
    rhs.push_back(std::to_string(k + 1));
  }
  return {"vecdisc-cert", "min ||heavy path sum||^2 >= k+1", join(lhs), join(rhs), pass_if(ok)};
}

ClaimRow disc_haar_value(unsigned max_k, const Limits& limits) {
  std::vector<std::string> lhs, rhs;
  bool derived = true;
  for (unsigned k = 1; k <= max_k; ++k) {
    const auto v = std::get<BigInt>(disc_exact(haar(k, limits), Norm::inf(), limits).value);
    derived = derived && v == k + 1;
    lhs.push_back(to_string(v));
    rhs.push_back(std::to_string(k));
  }
  // The stated value is k; the computed value is k+1 (rows carry k+1 nonzeros).
  return {"disc-haar-value", "disc(A_k): stated k, computed k+1", join(lhs), join(rhs),
          derived ? ClaimStatus::Info : ClaimStatus::Fail};
}

}  // namespace

ClaimsReport run_claims_suite(unsigned max_k, std::uint64_t seed, const Limits& limits) {
  if (max_k < 1 || max_k > 3) throw Error(ErrorKind::InvalidArgument, "max_k must lie in 1..3");
  ClaimsReport report;
  report.max_k = max_k;
  report.seed = seed;
  std::vector<std::function<ClaimRow()>> checks{
      [&] { return det_haar(limits); },
      [&] { return disc1(max_k, limits); },
      [&] { return detlb_le_2(max_k, limits); },
      [&] { return tum_pm(max_k, limits); },
      [&] { return permute(max_k, limits); },
      [&] { return identity(); },
      [&] { return disc_amp(max_k, limits); },
      [&] { return detlb_amp(max_k, limits); },
      [&] { return lsv(seed, limits); },
      [&] { return sos(max_k, limits); },
      [&] { return hadamard_det(limits); },
      [&] { return vecdisc(max_k, seed, limits); },
      [&] { return disc_haar_value(max_k, limits); },
  };
  for (auto& c : checks) report.rows.push_back(c());
  return report;
}

std::string format_report(const ClaimsReport& report) {
  std::string out = "claims suite  max_k=" + std::to_string(report.max_k) + "  seed=" + std::to_string(report.seed) + "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-16s %-6s ", "claim", "status");
  out += buf;
  out += "lhs | rhs | anchor\n";
  int pass = 0, fail = 0, info = 0;
  for (const auto& r : report.rows) {
    std::snprintf(buf, sizeof buf, "%-16s %-6s ", r.id.c_str(), to_string(r.status));
    out += buf;
    out += r.lhs + " | " + r.rhs + " | " + r.anchor + "\n";
    (r.status == ClaimStatus::Pass ? pass : r.status == ClaimStatus::Fail ? fail : info)++;
  }
  out += std::to_string(report.rows.size()) + " claims: " + std::to_string(pass) + " PASS, " + std::to_string(fail) +
         " FAIL, " + std::to_string(info) + " INFO\n";
  return out;
}

}  // namespace disclab
