#pragma once

#include <string>
#include <vector>

namespace tetraposet {

struct CliResult {
  int exit_code = 0;  // 0 pass, 1 mismatch/refusal, 2 usage error
  std::string out;    // text that goes to stdout (empty when --out is used)
};

// Runs the command line in-process: args exclude the program name. Every
// output is byte-deterministic for identical flags, except the wall_time_ms
// field of JSON certificates.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace tetraposet
