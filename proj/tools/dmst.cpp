#include <iostream>

#include "dmst/cli.hpp"

int main(int argc, char** argv) { return dmst::run_cli(argc, argv, std::cout, std::cerr); }
