#include <iostream>

#include "lagloci/cli.hpp"

int main(int argc, char** argv) { return lagloci::cli::main_entry(argc, argv, std::cout, std::cerr); }
