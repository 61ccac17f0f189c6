#include <iostream>

#include "mlsa/cli.hpp"

int main(int argc, char** argv) { return mlsa::run_cli(argc, argv, std::cout, std::cerr); }
