// Builds Y5 on the 34-point lower-bound set and prints the stretch witness.

#include "yao/yao.hpp"

#include <iostream>

int main() {
    const auto set = yao::lower_bound_y5();
    const auto g = yao::build_yao(set.points, 5);
    const auto r = yao::stretch_factor(g);

    std::cout.precision(12);
    std::cout << set.points.size() << " points, " << g.undirected_pairs().size() << " edges\n";
    std::cout << "stretch " << r.max_ratio << " between " << set.points.name(r.witness.first) << " and "
              << set.points.name(r.witness.second) << "\npath:";
    for (auto v : r.witness_path) std::cout << ' ' << set.points.name(v);
    std::cout << "\n";
}
