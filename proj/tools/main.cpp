#include <iostream>

#include "qcr/cli.hpp"

int main(int argc, char** argv) { return qcr::cli::run(argc, argv, std::cout, std::cerr); }
