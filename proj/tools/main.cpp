#include <iostream>
#include <vector>

#include "leibconf/frontend.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return leibconf::dispatch(args, std::cout, std::cerr);
}
