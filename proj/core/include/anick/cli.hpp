#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anick::cli {

// Dispatches one subcommand; results go to out, diagnostics to err.
// Returns 0 when all checks pass, 1 on a failed mathematical check,
// 2 on input errors (bad flags, unreadable files, malformed JSON).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// argv form, argv[0] ignored.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace anick::cli
