#pragma once

#include <string>
#include <vector>

namespace cusg {

/// Exit codes: 0 answered true/success, 1 answered false, 2 unknown at depth,
/// 64 usage or parse error.
struct CliResult {
  int exit_code = 0;
  std::string output;
};

CliResult run_cli(const std::vector<std::string>& args);

int cli_main(int argc, char** argv);

}  // namespace cusg
