#pragma once

#include <string>
#include <vector>

namespace fsqm::cli {

/// Parse, execute and write outputs. Returns the process exit code.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

} // namespace fsqm::cli
