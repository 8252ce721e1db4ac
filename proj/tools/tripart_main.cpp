#include <iostream>
#include <string>
#include <vector>

#include "tripart/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tripart::run(args, std::cout, std::cerr);
}
