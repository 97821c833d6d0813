#include <cstdio>

#include "starform/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string output;
  int code = starform::run_cli(args, output);
  std::fputs(output.c_str(), stdout);
  return code;
}
