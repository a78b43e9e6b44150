#include <iostream>
#include <string>
#include <vector>

#include "heislor/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return heislor::cli::execute(args, std::cout, std::cerr);
}
