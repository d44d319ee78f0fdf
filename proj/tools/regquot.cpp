#include <iostream>

#include "regquot/cli.hpp"

int main(int argc, char** argv) { return regquot::run_cli(argc, argv, std::cout, std::cerr); }
