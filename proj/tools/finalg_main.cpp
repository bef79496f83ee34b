#include <iostream>

#include "finalg/cli.hpp"

int main(int argc, char** argv) { return finalg::run_cli(argc, argv, std::cout, std::cerr); }
