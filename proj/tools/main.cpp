#include <iostream>

#include "episturmian/cli.hpp"

int main(int argc, char** argv) { return episturmian::cli::run(argc, argv, std::cout, std::cerr); }
