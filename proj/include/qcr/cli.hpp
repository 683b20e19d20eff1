#pragma once

#include <iosfwd>

namespace qcr::cli {

/// Runs the command line; returns the process exit code: 0 verified,
/// 1 a check was refuted, 2 input or usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcr::cli
