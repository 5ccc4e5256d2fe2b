#include <iostream>

#include "dlcoh/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dlcoh::run_cli(args, std::cout, std::cerr);
}
