#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "effint/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env;
  if (const char* t = std::getenv("EFFINT_THREADS")) env = t;
  return effint::cli::run(args, std::cout, std::cerr, env);
}
