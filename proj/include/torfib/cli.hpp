#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "torfib/config.hpp"

namespace torfib {

/// Matrix text format:
///
///   rows cols
///   <rows * cols integers, whitespace separated>
///   blocks: d1 d2 ...      (optional; default is one block per column)
///
/// Lines starting with '#' are comments. Errors carry line and column.
BlockedConfiguration parse_matrix_text(const std::string& text);
BlockedConfiguration parse_matrix_file(const std::string& path);

/// Inverse of parse_matrix_text. The blocks line is written only when some
/// block is not a singleton.
std::string serialize_matrix(const BlockedConfiguration& config);

struct JobSpec {
  std::string command;
  std::vector<std::string> inputs;
  // Flags without a value map to "true".
  std::map<std::string, std::string> options;

  bool flag(const std::string& name) const { return options.count(name) != 0; }
};

/// Builds a JobSpec from argv (argv[0] is the program name). Throws
/// UsageError on malformed command lines.
JobSpec parse_command_line(int argc, const char* const* argv);

/// Executes a job: 0 on success, 1 on algorithmic errors (non-pointed cones,
/// exhausted bounds, inhomogeneous inputs), 2 on parse errors.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// parse_command_line followed by run, with usage errors reported as exit 2.
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace torfib
