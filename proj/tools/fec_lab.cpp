#include <iostream>

#include "feclab/cli.hpp"

int main(int argc, char** argv) { return feclab::cli_main(argc, argv, std::cout, std::cerr); }
