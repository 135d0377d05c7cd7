#include <iostream>

#include "twgamma/cli.hpp"

int main(int argc, char** argv) {
    const auto r = twgamma::cli::run(argc, argv);
    std::cout << r.output;
    std::cerr << r.error;
    return r.exit_code;
}
