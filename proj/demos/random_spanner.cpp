// Y_k and YY_k stretch on random point sets for a range of k.

#include "yao/yao.hpp"

#include <iostream>

int main() {
    const auto ps = yao::random_points(300, yao::Distribution::Uniform, 7);
    std::cout.precision(6);
    std::cout << "k      Y_k    YY_k\n";
    for (int k = 5; k <= 12; ++k) {
        const double y = yao::stretch_factor(yao::build_yao(ps, k)).max_ratio;
        const double yy = yao::stretch_factor(yao::build_yao_yao(ps, k)).max_ratio;
        std::cout << k << "\t" << y << "\t" << yy << "\n";
    }
}
