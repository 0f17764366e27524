#include <charconv>
#include <fstream>
#include <string_view>

#include "disclab/error.hpp"
#include "disclab/limits.hpp"

namespace disclab {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_count(std::string_view key, std::string_view value, std::size_t line) {
  T out{};
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size() || value.empty()) {
    throw Error(ErrorKind::ParseError, "config line " + std::to_string(line) + ": bad value for " + std::string(key));
  }
  return out;
}

}  // namespace

void apply_config(Limits& limits, std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::ParseError, "config line " + std::to_string(line) + ": expected key = value");
    }
    const auto key = trim(s.substr(0, eq));
    const auto value = trim(s.substr(eq + 1));
    if (key == "max_entries")
      limits.max_entries = parse_count<std::size_t>(key, value, line);
    else if (key == "exhaustive_cols")
      limits.exhaustive_cols = parse_count<std::size_t>(key, value, line);
    else if (key == "herdisc_cols")
      limits.herdisc_cols = parse_count<std::size_t>(key, value, line);
    else if (key == "det_budget")
      limits.det_budget = parse_count<std::uint64_t>(key, value, line);
    else if (key == "vc_cols")
      limits.vc_cols = parse_count<std::size_t>(key, value, line);
    else if (key == "subset_budget")
      limits.subset_budget = parse_count<std::uint64_t>(key, value, line);
    else if (key == "threads")
      limits.threads = parse_count<unsigned>(key, value, line);
    else
      throw Error(ErrorKind::ParseError, "config line " + std::to_string(line) + ": unknown key " + std::string(key));
  }
}

void apply_config_file(Limits& limits, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open config file " + path);
  apply_config(limits, in);
}

}  // namespace disclab
