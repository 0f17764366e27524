#include <fstream>
#include <sstream>
#include <string>

#include "disclab/csv.hpp"
#include "disclab/error.hpp"

namespace disclab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view tok, std::size_t line_no) {
  std::string_view digits = tok;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  bool ok = !digits.empty();
  for (char c : digits) ok = ok && c >= '0' && c <= '9';
  if (!ok) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line_no) + ": not an integer: '" + std::string(tok) + "'");
  }
  std::string s(tok.front() == '+' ? tok.substr(1) : tok);
  return BigInt(s, 10);
}

}  // namespace

IntMatrix parse_csv(std::string_view text) {
  std::vector<BigInt> data;
  std::size_t cols = 0, rows = 0, line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) {
      // blank lines are only tolerated at the end of the input
      if (trim(text).find_first_not_of("\r\n \t") != std::string_view::npos) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": blank line inside matrix");
      }
      continue;
    }
    std::size_t count = 0;
    while (true) {
      const auto comma = line.find(',');
      data.push_back(parse_integer(trim(line.substr(0, comma)), line_no));
      ++count;
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": ragged row (" +
                                             std::to_string(count) + " entries, expected " + std::to_string(cols) + ")");
    }
    ++rows;
  }
  if (rows == 0) throw Error(ErrorKind::ParseError, "empty matrix");
  return IntMatrix(rows, cols, std::move(data));
}

IntMatrix read_csv(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

IntMatrix read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return read_csv(in);
}

std::string to_csv(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

void write_csv_file(const IntMatrix& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << to_csv(m);
}

}  // namespace disclab
