#pragma once

// Command dispatch behind the `tsg` binary. Kept in the library so tests
// can drive every subcommand in-process.

#include <stdexcept>
#include <string>
#include <vector>

#include "tsg/json_io.hpp"

namespace tsg::cli {

struct OptionSpec {
  std::string name; // without leading dashes
  std::string help;
  bool required = false;
};

struct CommandSpec {
  std::string name;
  std::string help;
  std::vector<OptionSpec> options;
};

const std::vector<CommandSpec> &command_specs();

/// Malformed invocation: unknown command, missing or unparsable option.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;

struct CommandOutcome {
  int exit_code = kExitOk;
  json body;
};

/// Runs one command. `args` maps option names to values, either strings as
/// typed on the command line or JSON values from an input document. Never
/// throws; failures come back as an error body with the matching exit code.
CommandOutcome run_command(const std::string &name, const json &args);

} // namespace tsg::cli
