#include <iostream>
#include <string>
#include <vector>

#include "interlink/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv, argv + argc);
    return interlink::run(args, std::cout, std::cerr);
}
