#include "tricode/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const auto parsed = tricode::cli::parse_command_line(argc, argv, std::cout, std::cerr);
    if (!parsed.config) return parsed.exit_code;
    return tricode::cli::run(*parsed.config);
}
