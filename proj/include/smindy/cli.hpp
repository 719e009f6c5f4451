#pragma once

#include <iosfwd>

namespace smindy {

// Full command-line entry point; returns the process exit code.
// 0 = success / verification passed, 1 = verification failed,
// 2 = usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace smindy
