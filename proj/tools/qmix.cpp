#include <vector>

#include "qmix/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qmix::cli::run(std::move(args));
}
