#include <iostream>

#include "optbranch/cli.hpp"

int main(int argc, char** argv) { return optbranch::cli_main(argc, argv, std::cout, std::cerr); }
