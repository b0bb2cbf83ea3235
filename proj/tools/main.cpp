#include "steinext/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return steinext::parse_and_dispatch(argc, argv, std::cout, std::cerr); }
