#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbtk::cli {

/// Exit codes, stable for scripting:
///   0  success (for `validate`: no error-severity violations)
///   1  `validate` found violations
///   2  the input file failed to parse (or, for `outcome`, to validate)
///   64 usage error (bad flags, bad subcommand, infeasible generator spec)
///   66 input file missing or unreadable
///   74 output file could not be written
inline constexpr int exit_ok = 0;
inline constexpr int exit_violations = 1;
inline constexpr int exit_data_error = 2;
inline constexpr int exit_usage = 64;
inline constexpr int exit_no_input = 66;
inline constexpr int exit_io_error = 74;

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out`; diagnostics and errors go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbtk::cli
