#include <iostream>

#include "tgh/cli/app.hpp"

int main(int argc, char ** argv)
{
  const std::vector<std::string> args(argv + 1, argv + argc);
  return tgh::cli::run(args, std::cout, std::cerr);
}
