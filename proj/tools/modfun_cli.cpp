#include <iostream>

#include "modfun/cli.hpp"

int main(int argc, char** argv) { return modfun::run_cli(argc, argv, std::cout, std::cerr); }
