#include <iostream>

#include "homgd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return homgd::run(args, std::cout, std::cerr);
}
