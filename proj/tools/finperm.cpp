#include <iostream>
#include <string>
#include <vector>

#include "finperm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  finperm::cli::RunResult result = finperm::cli::run(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.status;
}
