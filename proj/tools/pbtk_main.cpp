#include <iostream>
#include <string>
#include <vector>

#include "pbtk/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pbtk::cli::run(args, std::cout, std::cerr);
}
