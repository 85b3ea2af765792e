#include <iostream>
#include <string>
#include <vector>

#include "signedperm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return signedperm::cli::run(args, std::cout, std::cerr);
}
