#include <iostream>

#include "twodist/cli.hpp"

int main(int argc, char** argv) { return twodist::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
