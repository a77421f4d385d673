#include <iostream>

#include "cauchy/cli.hpp"

int main(int argc, char** argv) { return cauchy::cli::main(argc, argv, std::cout, std::cerr); }
