#include <iostream>

#include "tamejl/cli.hpp"

int main(int argc, char** argv)
{
    return tamejl::cli::run(argc, argv, std::cout, std::cerr);
}
