#include <string>
#include <vector>

#include "quadfermat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quadfermat::cli::run(args);
}
