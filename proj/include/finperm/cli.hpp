#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace finperm::cli {

/// Exit statuses of the command-line front end.
enum ExitStatus : int {
  exit_ok = 0,
  exit_inequivalent = 1,  // `equal` on inequivalent inputs; failed selftest
  exit_usage = 2,         // usage errors, syntax errors, invalid input
  exit_internal = 3,      // violated library contract
};

struct RunResult {
  int status = exit_ok;
  std::string out;  // what belongs on stdout
  std::string err;  // what belongs on stderr
};

/// Executes one command given argv-style arguments (without the program
/// name). Expression and term arguments accept "-" to read the text from
/// `input`. Deterministic: output depends only on arguments and input.
RunResult run(const std::vector<std::string>& args, std::istream& input);

RunResult run(const std::vector<std::string>& args);  // reads stdin for "-"

}  // namespace finperm::cli
