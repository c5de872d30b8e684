#include "rrmon/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return rrmon::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
