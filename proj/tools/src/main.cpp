#include <iostream>

#include "asymexp/cli.hpp"

int main(int argc, char** argv) { return asymexp::cli::run(argc, argv, std::cout, std::cerr); }
