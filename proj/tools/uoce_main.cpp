#include <iostream>

#include "uoce/cli/commands.hpp"

int main(int argc, char** argv) { return uoce::cli::run_cli(argc, argv, std::cout, std::cerr); }
