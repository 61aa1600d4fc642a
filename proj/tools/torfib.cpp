#include <iostream>

#include "torfib/cli.hpp"

int main(int argc, char** argv) { return torfib::run_command_line(argc, argv, std::cout, std::cerr); }
