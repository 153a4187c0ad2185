#include <iostream>
#include <string>
#include <vector>

#include "biggs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return biggs::dispatch(args, std::cout, std::cerr);
}
