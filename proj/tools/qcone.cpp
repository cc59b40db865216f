#include <iostream>

#include "qcone/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string out, err;
  const int status = qcone::run_main(args, out, err);
  std::cout << out;
  std::cerr << err;
  return status;
}
