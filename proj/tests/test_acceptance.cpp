#include <cstdlib>
#include <iostream>

#include "unipotent/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    bool all = true;
    unipotent::run_acceptance(only, [&](const unipotent::CriterionResult& r) {
        std::cout << unipotent::format_result(r) << std::endl;
        all = all && r.pass;
    });
    return all ? 0 : 1;
}
