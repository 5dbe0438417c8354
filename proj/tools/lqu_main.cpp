#include <iostream>
#include <string>
#include <vector>

#include "lqu/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lqu::cli::run(args, std::cout, std::cerr);
}
