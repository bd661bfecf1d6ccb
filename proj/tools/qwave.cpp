#include <qwave/cli.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    return qwave::run_cli(argc, argv, std::cout, std::cerr);
}
