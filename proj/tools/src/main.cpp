#include <iostream>

#include "ltlfmt_tools/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return ltlfmt::tools::run_cli(args, std::cout, std::cerr);
}
