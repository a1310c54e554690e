#include <iostream>

#include "pwz_cli/cli.hpp"

int main(int argc, char** argv) { return pwz::cli::dispatch(argc, argv, std::cout, std::cerr); }
