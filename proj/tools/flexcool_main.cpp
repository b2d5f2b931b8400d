#include <iostream>

#include "flexcool/cli.hpp"

int main(int argc, char** argv) { return flexcool::run_cli(argc, argv, std::cout, std::cerr); }
