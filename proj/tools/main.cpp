#include "selfdual/workbench.hpp"

#include <iostream>

int main(int argc, char** argv) { return selfdual::run_cli(argc, argv, std::cout, std::cerr); }
