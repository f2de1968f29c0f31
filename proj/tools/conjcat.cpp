#include <iostream>

#include "conjcat/cli.hpp"

int main(int argc, char** argv) { return conjcat::cli_main(argc, argv, std::cout, std::cerr); }
