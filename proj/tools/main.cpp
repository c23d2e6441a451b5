#include <iostream>

#include "l1line/cli.hpp"

int main(int argc, char** argv) { return l1line::cli::run(argc, argv, std::cout, std::cerr); }
