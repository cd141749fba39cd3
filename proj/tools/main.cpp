#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return fundsol::cli::run(argc, argv, std::cout, std::cerr); }
