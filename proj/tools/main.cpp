#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return dilabel::cli::run(argc, argv, std::cout, std::cerr); }
