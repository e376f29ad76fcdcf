#include <iostream>
#include <string>
#include <vector>

#include "nf_lab_cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nflab::cli::run(args, std::cout, std::cerr, std::cin);
}
