#include "lctkit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lctkit::cli::run(argc, argv, std::cout, std::cerr); }
