#include <iostream>

#include "trendrank/cli.hpp"

int main(int argc, char** argv) { return trendrank::cli_main(argc, argv, std::cout, std::cerr); }
