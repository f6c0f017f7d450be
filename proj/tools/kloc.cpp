#include <iostream>

#include "kloc/cli/app.hpp"

int main(int argc, char ** argv) { return kloc::run_cli(argc, argv, std::cout, std::cerr); }
