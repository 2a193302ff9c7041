#include <vector>

#include "trendkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return trendkit::run_command(args);
}
