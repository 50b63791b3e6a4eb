#include <iostream>
#include <string>
#include <vector>

#include "irg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return irg::run_cli(args, std::cin, std::cout, std::cerr);
}
