#include <iostream>

#include "tcent/cli.hpp"

int main(int argc, char** argv) { return tcent::cli::run(argc, argv, std::cout, std::cerr); }
