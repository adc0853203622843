#include <iostream>

#include "superstring/cli_app.hpp"

int main(int argc, char** argv) {
    return superstring::run_cli(argc, argv, std::cout, std::cerr);
}
