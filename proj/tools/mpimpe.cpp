#include <iostream>

#include "mpimpe/cli.hpp"

int main(int argc, char** argv) { return mpimpe::cli::run(argc, argv, std::cout, std::cerr); }
