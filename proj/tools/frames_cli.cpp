#include <iostream>
#include <string>
#include <vector>

#include "frames/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return frames::cli::dispatch(args, std::cout, std::cerr);
}
