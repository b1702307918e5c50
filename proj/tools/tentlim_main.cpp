#include <iostream>
#include <string>
#include <vector>

#include "tentlim/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tentlim::tentlim_run(args, std::cout, std::cerr);
}
