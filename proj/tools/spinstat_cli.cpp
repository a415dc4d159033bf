#include <iostream>

#include "spinstat/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return spinstat::cli::run_cli(argc, argv, {std::cin, std::cout, std::cerr});
}
