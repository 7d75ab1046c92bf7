#pragma once
// Testable CLI core: the sectio binary is a thin argv shim over run_cli.
//
// Exit codes: 0 success, 1 computational failure (search budget exhausted,
// or verification found a FAIL), 2 usage/parse/elaboration errors.

#include <string>
#include <vector>

#include "sectio/result.hpp"

namespace sectio {

struct RunResult {
  int exit_code = 0;
  std::string text;  // what the binary prints: human summary, or the
                     // serialized document under --json
  Json doc;          // the result document (error documents included)
};

// args excludes argv[0].
RunResult run_cli(const std::vector<std::string>& args);

}  // namespace sectio
