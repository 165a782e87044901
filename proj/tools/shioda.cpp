#include <iostream>
#include <string>
#include <vector>

#include "shioda/report.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return shioda::run_cli(args, std::cout, std::cerr);
}
