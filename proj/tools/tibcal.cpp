#include <iostream>

#include "tibcal/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return tibcal::run_cli(args, std::cout, std::cerr);
}
