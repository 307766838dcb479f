#pragma once

#include <ostream>

namespace awstruct::cli {

/// Runs the command line; returns the process exit code (0 success,
/// 1 verification or convergence failure, 2 usage or configuration error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace awstruct::cli
