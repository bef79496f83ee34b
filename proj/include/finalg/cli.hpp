#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "finalg/bounds.hpp"

namespace finalg {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2, kExitBound = 3 };

struct Command {
  enum class Sub { Units, Radical, Center, GroupInfo, Iso, Verify };
  Sub sub = Sub::Verify;
  /// Expression strings (units/radical/center/group-info/iso) or check names (verify).
  std::vector<std::string> args;
  bool json = false;
  bool timing = true;
  unsigned jobs = 1;
  Bounds bounds;
};

/// Runs a parsed command. Exit codes: 0 success, 1 a verification failed,
/// 2 usage or parse error, 3 size bound exceeded.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Catalog name of a group ("S3 = D6", "Q8", ...) or empty when none applies.
class FiniteGroup;
std::string catalog_name(const FiniteGroup& g);

}  // namespace finalg
