#include "pitr_cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pitr::cli::run(argc, argv, std::cout, std::cerr); }
