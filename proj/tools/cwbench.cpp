#include <iostream>
#include <string>
#include <vector>

#include "cwb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cwb::run(args, std::cout, std::cerr);
}
