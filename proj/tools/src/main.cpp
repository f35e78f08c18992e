#include <iostream>

#include "infocost_cli/cli.hpp"

int main(int argc, char** argv) { return infocost::cli::run(argc, argv, std::cout, std::cerr); }
