#include <iostream>
#include <string>
#include <vector>

#include "rcdkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rcdkit::run_cli(args, std::cin, std::cout, std::cerr);
}
