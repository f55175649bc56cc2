#include <iostream>

#include "zsr/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return zsr::cli::run(args, std::cout, std::cerr);
}
