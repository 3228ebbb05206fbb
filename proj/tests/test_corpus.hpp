#pragma once

// Shared random point-set corpus: n in {10, 50, 200}, four distributions,
// fixed seeds.

#include "yao/random_points.hpp"

#include <cstdint>
#include <vector>

namespace yao::testing {

struct CorpusEntry {
    std::size_t n;
    Distribution dist;
    std::uint64_t seed;
    PointSet points;
};

inline std::vector<CorpusEntry> corpus(int seeds_per_cell = 9) {
    std::vector<CorpusEntry> out;
    for (std::size_t n : {10, 50, 200})
        for (auto d : {Distribution::Uniform, Distribution::Clustered, Distribution::Annulus, Distribution::GridJitter})
            for (int s = 0; s < seeds_per_cell; ++s) {
                const std::uint64_t seed = 1000 * n + 100 * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(s);
                out.push_back({n, d, seed, random_points(n, d, seed)});
            }
    return out;
}

}// namespace yao::testing
