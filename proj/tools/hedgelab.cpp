#include "hedgelab/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return hedgelab::run_cli(argc, argv, std::cout, std::cerr); }
