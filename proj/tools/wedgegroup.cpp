#include <iostream>

#include "wedgegroup/cli.hpp"

int main(int argc, char** argv)
{
  return wg::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
