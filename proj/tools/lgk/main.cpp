#include <cstdlib>
#include <cstring>
#include <iostream>

#include "lgk/cli.hpp"

int main(int argc, char** argv) {
    lgk::cli::Options options;
    if (const char* c = std::getenv("LGK_COLOR")) options.color = std::strcmp(c, "") != 0 && std::strcmp(c, "0") != 0 && std::strcmp(c, "never") != 0;
    return lgk::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr, options);
}
