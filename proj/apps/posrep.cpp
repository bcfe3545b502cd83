#include <iostream>

#include "posrep/cli.hpp"

int main(int argc, char** argv) { return posrep::run_cli(argc, argv, std::cout, std::cerr); }
