#include <iostream>

#include "nhq/cli.hpp"

int main(int argc, char** argv) { return nhq::cli::main(argc, argv, std::cout, std::cerr); }
