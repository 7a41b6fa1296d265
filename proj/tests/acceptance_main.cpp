#include "klrlab/acceptance.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    bool all = true;
    if (argc > 1) {
        for (int i = 1; i < argc; ++i) {
            auto r = klrlab::run_criterion(std::atoi(argv[i]));
            std::cout << klrlab::format_line(r) << std::endl;
            all = all && r.pass;
        }
        return all ? 0 : 1;
    }
    for (int id = 1; id <= 11; ++id) {
        auto r = klrlab::run_criterion(id);
        std::cout << klrlab::format_line(r) << std::endl;
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
