#include <lplab/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return lplab::cli::run(argc, argv, std::cout, std::cerr); }
