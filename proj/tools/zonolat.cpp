#include <iostream>

#include "zonolat/cli.hpp"

int main(int argc, char** argv) { return zonolat::run_cli(argc, argv, std::cout, std::cerr); }
