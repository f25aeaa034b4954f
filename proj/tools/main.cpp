#include <string>
#include <vector>

#include "linpot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return linpot::run_cli(std::move(args));
}
