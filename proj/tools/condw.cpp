#include <iostream>

#include "condw/cli.hpp"

int main(int argc, char** argv) { return condw::cli::run(argc, argv, std::cout, std::cerr); }
