#include <cstdio>
#include <string>
#include <vector>

#include "sectio/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  sectio::RunResult rr = sectio::run_cli(args);
  if (!rr.text.empty()) std::fputs(rr.text.c_str(), stdout);
  return rr.exit_code;
}
