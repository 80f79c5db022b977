#include "parayam/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return parayam::run_cli(argc, argv, std::cout, std::cerr);
}
