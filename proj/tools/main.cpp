#include <iostream>
#include <string>
#include <vector>

#include "m0n/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    return m0n::run_command(args, std::cout, std::cerr);
}
