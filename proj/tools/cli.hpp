#pragma once

#include <iosfwd>

namespace coda::cli {

// Runs the command line against the given streams and returns the exit
// status: 0 success, 1 failed demo assertions, 2 cap or overflow errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace coda::cli
