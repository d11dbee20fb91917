#include <hankel/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return hankel::cli::main_entry(argc, argv, std::cout, std::cerr); }
