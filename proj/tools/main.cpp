#include <iostream>
#include <string>
#include <vector>

#include "markov/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return markov::cli::run(args, std::cin, std::cout, std::cerr);
}
