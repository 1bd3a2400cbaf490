#include <iostream>

#include "mactc/cli.hpp"

int main(int argc, char** argv) { return mactc::run_cli(argc, argv, std::cout, std::cerr); }
