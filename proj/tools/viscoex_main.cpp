#include <iostream>

#include "viscoex/cli.hpp"

int main(int argc, char** argv) {
    return viscoex::cli::run(argc, argv, std::cout, std::cerr);
}
