#include <iostream>

#include "pargroupoid/cli.hpp"

int main(int argc, char** argv) { return pargroupoid::cli::run(argc, argv, std::cout, std::cerr); }
