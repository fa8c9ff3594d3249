#include <iostream>

#include "leavitt/cli.hpp"

int main(int argc, char** argv) { return leavitt::run_cli(argc, argv, std::cout, std::cerr); }
