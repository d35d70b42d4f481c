#include <iostream>
#include <string>
#include <vector>

#include "diffposet/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return diffposet::run(args, std::cout, std::cerr);
}
