#include <iostream>

#include "qsp/cli.hpp"

int main(int argc, char** argv) {
    return qsp::run_cli(argc, argv, std::cout, std::cerr);
}
