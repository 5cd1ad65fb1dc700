#include <iostream>
#include <vector>

#include "tamestrat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tamestrat::cli::run(args, std::cout, std::cerr);
}
