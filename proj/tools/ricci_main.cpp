#include <iostream>
#include <string>
#include <vector>

#include "ricci/run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ricci::cli::run(args, std::cout, std::cerr);
}
