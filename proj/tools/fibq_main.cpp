// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <iostream>
#include <vector>

#include "fibq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fibq::run_cli(std::move(args), std::cin, std::cout, std::cerr);
}
