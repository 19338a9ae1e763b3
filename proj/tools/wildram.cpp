#include <iostream>

#include "wildram/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wildram::run_cli(args, std::cin, std::cout, std::cerr);
}
