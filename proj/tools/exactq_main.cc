#include <iostream>

#include "exactq/cli.h"

int main(int argc, char **argv) {
    return exactq::run_cli(argc, argv, std::cout, std::cerr);
}
