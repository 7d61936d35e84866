#pragma once

#include <iosfwd>

namespace sparsedc::cli {

// Entry point for the `sparsedc` command. Returns the process exit status;
// normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sparsedc::cli
