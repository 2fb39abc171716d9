#include <iostream>

#include "brauerlab/commands.hpp"

int main(int argc, char** argv) { return brauerlab::run_cli(argc, argv, std::cout, std::cerr); }
