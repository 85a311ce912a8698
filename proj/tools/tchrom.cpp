#include <iostream>

#include "tchrom/cli.hpp"

int main(int argc, char** argv) { return tchrom::cli::run(argc, argv, std::cout, std::cerr); }
