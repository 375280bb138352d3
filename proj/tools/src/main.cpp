#include <iostream>

#include "egal_cli/cli.hpp"

int main(int argc, char** argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return egal::cli::run_command(args, std::cout, std::cerr);
}
