// Stretch of the Yao-Yao corridor as levels are added.

#include "yao/yao.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char **argv) {
    const int levels = argc > 1 ? std::atoi(argv[1]) : 5;
    std::cout.precision(10);
    for (int level = 1; level <= levels; ++level) {
        const auto fam = yao::yy5_unbounded_family(level);
        const auto r = yao::stretch_factor(yao::build_yao_yao(fam.points, 5));
        std::cout << "levels " << level << "  points " << fam.points.size() << "  stretch " << r.max_ratio << "\n";
    }
}
