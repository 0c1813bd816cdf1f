#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pqcomb::cli {

// Exit statuses of the command-line tool.
constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_audit_failed = 2;

// Runs one invocation. args excludes the program name. Results go to `out`
// (or to the --out file) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pqcomb::cli
