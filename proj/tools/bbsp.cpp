#include <iostream>

#include "bbsp/cli.hpp"

int main(int argc, char** argv) { return bbsp::run_cli(argc, argv, std::cout, std::cerr); }
