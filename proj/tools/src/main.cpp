#include <iostream>
#include <string>
#include <vector>

#include "mkc_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mkc::cli::run(args, std::cout, std::cerr);
}
