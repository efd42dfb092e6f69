#include <iostream>
#include <string>
#include <vector>

#include "balgamma/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return balgamma::run_cli(args, std::cin, std::cout, std::cerr);
}
