#include <iostream>

#include "bsqdao/cli.hpp"

int main(int argc, char** argv) { return bsq::run_cli(argc, argv, std::cout, std::cerr); }
