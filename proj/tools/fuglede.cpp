#include <iostream>
#include <string>
#include <vector>

#include "fuglede/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fuglede::cli::run(args, std::cout, std::cerr);
}
