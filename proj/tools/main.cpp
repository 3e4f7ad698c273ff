#include <cliquelab/cli.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    return cliquelab::run_cli(argc, argv, std::cout, std::cerr);
}
