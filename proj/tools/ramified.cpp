#include <iostream>

#include "ramified/cli.hpp"

int main(int argc, char** argv) { return ramified::cli::run(argc, argv, std::cout, std::cerr); }
