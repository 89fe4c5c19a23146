#include <iostream>
#include <string>
#include <vector>

#include "stabcone/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return stabcone::cli::run(args, std::cout, std::cerr);
}
