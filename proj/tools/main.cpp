#include <iostream>

#include "cmkit/cli.hpp"

int main(int argc, char** argv) { return cmkit::cli::main(argc, argv, std::cin, std::cout, std::cerr); }
