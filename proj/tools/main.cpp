#include <iostream>
#include <string>
#include <vector>

#include "conevol/cli/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return conevol::cli::run(std::move(args), std::cout, std::cerr);
}
