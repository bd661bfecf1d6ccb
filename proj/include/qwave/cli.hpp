#pragma once

#include <ostream>

namespace qwave {

enum exit_code : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_numeric = 3,
};

/// Entry point of the qwave command line. Subcommands: ratio, verify, plot.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qwave
