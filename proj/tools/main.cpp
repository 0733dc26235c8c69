#include "lierig_cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return lierig::cli::run(argc, argv, std::cout, std::cerr); }
