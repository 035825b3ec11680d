#pragma once

#include <iosfwd>

namespace eafc::cli {

// Full command-line driver; streams are injectable so tests can capture
// output. Returns the process exit code: 0 = success / affirmative answer,
// 1 = negative answer (well-formed input), 2 = input or usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eafc::cli
