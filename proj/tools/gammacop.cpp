#include <iostream>

#include "gammacop/cli.hpp"

int main(int argc, char** argv) { return gammacop::run_cli(argc, argv, std::cout, std::cerr); }
