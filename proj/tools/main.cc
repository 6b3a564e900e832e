#include "cli.hh"

#include <iostream>

int main(int argc, char * argv[])
{
    std::vector<std::string> args(argv, argv + argc);
    return tba::cli::run(args, std::cout, std::cerr);
}
