#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "disclab/limits.hpp"

namespace disclab {

enum class ClaimStatus { Pass, Fail, Info };
const char* to_string(ClaimStatus s) noexcept;

struct ClaimRow {
  std::string id;
  std::string anchor;  // the checked statement as a formula
  std::string lhs;
  std::string rhs;
  ClaimStatus status;
};

struct ClaimsReport {
  unsigned max_k = 0;
  std::uint64_t seed = 0;
  std::vector<ClaimRow> rows;

  bool all_pass() const;  // no FAIL rows
};

// Runs every claim check on small instances; exhaustive rows use k = 1..max_k
// (1 <= max_k <= 3). Deterministic in (max_k, seed).
ClaimsReport run_claims_suite(unsigned max_k, std::uint64_t seed, const Limits& limits = {});

// Fixed-width text table, no timing fields.
std::string format_report(const ClaimsReport& report);

}  // namespace disclab
