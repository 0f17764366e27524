#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "disclab/int_matrix.hpp"

namespace disclab {

// Matrix text format: one row per line, comma-separated signed decimal
// integers, no header. Ragged rows and non-integer tokens are ParseErrors.
IntMatrix parse_csv(std::string_view text);
IntMatrix read_csv(std::istream& in);
IntMatrix read_csv_file(const std::string& path);

// Canonical emission: no spaces, '\n' after every row.
std::string to_csv(const IntMatrix& m);
void write_csv_file(const IntMatrix& m, const std::string& path);

}  // namespace disclab
