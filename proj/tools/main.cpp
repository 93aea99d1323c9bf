#include <iostream>
#include <string>
#include <vector>

#include "hodgevf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hodgevf::cli::run(args, std::cout, std::cerr);
}
