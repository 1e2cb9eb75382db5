#include <iostream>

#include "geoloop/cli.hpp"

int main(int argc, char** argv) { return geoloop::cli::run(argc, argv, std::cout, std::cerr); }
