#include <iostream>

#include "rainbow/cli.hpp"

int main(int argc, char** argv)
{
    return rainbow::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
