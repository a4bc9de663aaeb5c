#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::ios_base::sync_with_stdio(false);
    std::vector<std::string> args(argv + 1, argv + argc);
    return gspmixdom::cli::run(args, std::cout, std::cerr);
}
