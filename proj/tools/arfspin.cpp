#include <iostream>

#include "arfspin/cli.hpp"

int main(int argc, char** argv) { return arfspin::cli::run_cli(argc, argv, std::cout, std::cerr); }
