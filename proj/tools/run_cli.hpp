#pragma once

#include <string>
#include <vector>

namespace smtc {

// Executes one CLI command. `args` excludes the program name. Exit code 0 on
// success, 1 when a verification or consistency check fails, 2 on malformed
// input (bad flags, schema errors, shape errors).
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const* argv);

}  // namespace smtc
