#include <iostream>
#include <vector>

#include "gaiakit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gaiakit::cli::run(args, std::cout, std::cerr);
}
