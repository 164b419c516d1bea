// semigaps - gap-structure analytics for numerical semigroups

#include <iostream>
#include <string>
#include <vector>

#include "semigaps/cli.hpp"

int main(int argc, char* argv[]) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return semigaps::cli::run(args, std::cout, std::cerr);
}
