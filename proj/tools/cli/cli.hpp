#pragma once

#include <ostream>

namespace disclab::cli {

// Entry point shared by the executable and the tests. Returns the process exit
// code: 0 success, 1 a verification failure, 2 usage or input error, 3 a
// resource cap was hit.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace disclab::cli
