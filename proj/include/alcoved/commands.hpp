#ifndef ALCOVED_COMMANDS_HPP
#define ALCOVED_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "alcoved/jobspec.hpp"

namespace alcoved {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2 };

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;
};

struct RunOptions {
  bool json = false;
  std::optional<long> T;
  std::optional<Point> seed;
  std::optional<std::string> dot_path;
};

CommandResult cmd_ehrhart(const JobSpec& spec, const RunOptions& opts);
CommandResult cmd_verify(const JobSpec& spec, const RunOptions& opts);
CommandResult cmd_alcoves(const JobSpec& spec, const RunOptions& opts);
CommandResult cmd_dosp(int k, int n, bool json);
/// `roots` empty means all alcoves.
CommandResult cmd_conjecture(int n, const std::vector<size_t>& roots, bool json);

}  // namespace alcoved

#endif  // ALCOVED_COMMANDS_HPP
