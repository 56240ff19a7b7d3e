// autstruct.cc -- command-line entry point

#include <iostream>

#include "autstruct/cli.hh"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return autstruct::cli::run(args, std::cout, std::cerr);
}
