#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>

namespace disclab {

// Resource caps shared by every module. Defaults follow the documented
// desk-scale limits; the CLI raises them from a key=value config file.
struct Limits {
  std::size_t max_entries = std::size_t{1} << 20;   // constructed matrices
  std::size_t exhaustive_cols = 24;                 // disc_exact
  std::size_t herdisc_cols = 16;                    // herdisc_exact
  std::uint64_t det_budget = 10'000'000;            // determinant evaluations
  std::size_t vc_cols = 20;                         // vc_dimension / is_shattered
  std::uint64_t subset_budget = 100'000;            // vollb subsets
  unsigned threads = 1;
};

// Parses "key = value" lines; '#' starts a comment. Unknown keys and bad
// values raise Error{ParseError}.
void apply_config(Limits& limits, std::istream& in);
void apply_config_file(Limits& limits, const std::string& path);

}  // namespace disclab
