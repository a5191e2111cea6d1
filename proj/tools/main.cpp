#include <iostream>

#include "springerkit/cli/cli.hpp"

int main(int argc, char** argv) { return springerkit::cli::run(argc, argv, std::cout, std::cerr); }
