#include "pql/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pql::cli::run(argc, argv, std::cout, std::cerr); }
