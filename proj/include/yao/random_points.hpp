#pragma once

// Seeded random point sets for property tests and the `generate random`
// command.

#include "yao/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace yao {

enum class Distribution {
    /// Uniform in the unit square.
    Uniform,
    /// Gaussian blobs around a handful of uniform centres.
    Clustered,
    /// Thin noisy ring around the unit circle.
    Annulus,
    /// Jittered square lattice.
    GridJitter,
};

inline std::string_view to_string(Distribution d) {
    switch (d) {
        case Distribution::Uniform: return "uniform";
        case Distribution::Clustered: return "clustered";
        case Distribution::Annulus: return "annulus";
        case Distribution::GridJitter: return "grid-jitter";
    }
    return "uniform";
}

inline Distribution parse_distribution(std::string_view s) {
    for (auto d : {Distribution::Uniform, Distribution::Clustered, Distribution::Annulus, Distribution::GridJitter})
        if (to_string(d) == s) return d;
    throw std::invalid_argument("unknown distribution '" + std::string(s) + "'");
}

/// n distinct points; exact duplicates are redrawn.
inline PointSet random_points(std::size_t n, Distribution dist, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<Point2> centres;
    if (dist == Distribution::Clustered) {
        const std::size_t count = 2 + static_cast<std::size_t>(std::sqrt(static_cast<double>(n)) / 2.0);
        for (std::size_t i = 0; i < count; ++i) centres.push_back({unit(rng), unit(rng)});
    }
    const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(std::max<std::size_t>(n, 1)))));

    auto draw = [&](std::size_t i) -> Point2 {
        switch (dist) {
            case Distribution::Uniform: return {unit(rng), unit(rng)};
            case Distribution::Clustered: {
                std::normal_distribution<double> spread(0.0, 0.03);
                std::uniform_int_distribution<std::size_t> pick(0, centres.size() - 1);
                const auto &c = centres[pick(rng)];
                return {c.x + spread(rng), c.y + spread(rng)};
            }
            case Distribution::Annulus: {
                const double angle = 2.0 * std::numbers::pi * unit(rng);
                const double r = 1.0 + 0.05 * (unit(rng) - 0.5);
                return {r * std::cos(angle), r * std::sin(angle)};
            }
            case Distribution::GridJitter: {
                const double gx = static_cast<double>(i % side);
                const double gy = static_cast<double>(i / side);
                return {gx + 0.3 * (unit(rng) - 0.5), gy + 0.3 * (unit(rng) - 0.5)};
            }
        }
        return {unit(rng), unit(rng)};
    };

    std::vector<Point2> pts;
    std::set<std::pair<double, double>> seen;
    pts.reserve(n);
    while (pts.size() < n) {
        const Point2 p = draw(pts.size());
        if (seen.emplace(p.x, p.y).second) pts.push_back(p);
    }
    return PointSet(std::move(pts));
}

}// namespace yao
