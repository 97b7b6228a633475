#include <iostream>

#include "hgda/cli.hpp"

int main(int argc, char** argv) { return hgda::cli_main(argc, argv, std::cout, std::cerr); }
