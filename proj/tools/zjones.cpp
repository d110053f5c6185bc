#include <iostream>

#include "zjones/commands.hpp"

int main(int argc, char** argv) { return zj::run_cli(argc, argv, std::cout, std::cerr); }
