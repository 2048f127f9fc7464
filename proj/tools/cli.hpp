#pragma once

#include <ostream>

namespace diamondlab::cli {

/// Exit codes: 0 success, 1 failed verification or I/O, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diamondlab::cli
