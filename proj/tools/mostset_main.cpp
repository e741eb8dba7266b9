// mostset — most-intersection toolkit command-line frontend.
//
// Usage: mostset <subcommand> [options]   (see --help)
//        mostset --selftest [--data DIR]

#include <iostream>
#include <string>
#include <vector>

#include "mostset/cli.hpp"

int main(int argc, char* argv[]) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mostset::cli::run(args, std::cout, std::cerr);
}
