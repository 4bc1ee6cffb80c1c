#include <iostream>
#include <string>
#include <vector>

#include "ferro/cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ferro::cli::run(args, std::cout, std::cerr);
}
