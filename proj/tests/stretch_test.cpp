#include "test_corpus.hpp"
#include "yao/yao.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace {

using yao::Point2;
using yao::PointSet;

yao::DirectedGeomGraph custom(PointSet ps, const std::vector<yao::IndexPair> &edges) {
    return {std::move(ps), {.variant = yao::Variant::Custom}, edges};
}

yao::DirectedGeomGraph complete(const PointSet &ps) {
    std::vector<yao::IndexPair> e;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) e.emplace_back(i, j);
    return custom(ps, e);
}

TEST(ShortestPaths, Examples) {
    const auto two = yao::build_yao(PointSet({{0, 0}, {1, 0}}), 5);
    EXPECT_EQ(yao::shortest_paths_from(two, 0).distances[1], 1.0);

    const auto path = custom(PointSet({{0, 0}, {1, 0}, {1, 1}}), {{0, 1}, {1, 2}});
    const auto sp = yao::shortest_paths_from(path, 0);
    EXPECT_EQ(sp.distances[2], 2.0);
    EXPECT_EQ(sp.path_to(2), (std::vector<std::size_t>{0, 1, 2}));
    // undirected semantics by default
    EXPECT_EQ(yao::shortest_paths_from(path, 2).distances[0], 2.0);
    EXPECT_EQ(yao::shortest_paths_from(path, 2, true).distances[0], yao::kInfinity);
    EXPECT_THROW(yao::shortest_paths_from(path, 9), std::out_of_range);
}

TEST(ShortestPaths, LowerBoundSourceU) {
    const auto g = yao::build_yao(yao::lower_bound_y5().points, 5);
    const double duv = yao::shortest_paths_from(g, 0).distances[1];
    EXPECT_NEAR(duv, 2.8766265012969177 * 265.00566031690721, 1e-6);
    EXPECT_NEAR(duv, yao::brute_force_stretch(g).max_ratio * yao::distance({0, 0}, {252, 82}), 1e-6);
}

TEST(StretchFactor, Basics) {
    const auto two = yao::build_yao(PointSet({{0, 0}, {1, 0}}), 5);
    EXPECT_EQ(yao::stretch_factor(two).max_ratio, 1.0);
    EXPECT_EQ(yao::brute_force_stretch(two).max_ratio, 1.0);
    EXPECT_THROW(yao::stretch_factor(yao::build_yao(PointSet({{0, 0}}), 5)), std::invalid_argument);
}

TEST(StretchFactor, DisconnectedIsInfinite) {
    const auto g = custom(PointSet({{0, 0}, {1, 0}, {5, 0}, {6, 0}}), {{0, 1}, {2, 3}});
    const auto r = yao::stretch_factor(g);
    EXPECT_EQ(r.max_ratio, yao::kInfinity);
    EXPECT_FALSE(r.connected());
    EXPECT_EQ(r.witness, (yao::IndexPair{0, 2}));
    EXPECT_FALSE(yao::is_spanner(g, 100.0).is_spanner);
    EXPECT_EQ(yao::brute_force_stretch(g).max_ratio, yao::kInfinity);
    EXPECT_EQ(yao::brute_force_stretch(g).witness, (yao::IndexPair{0, 2}));
}

TEST(StretchFactor, CompleteGraphIsOneSpanner) {
    const auto ps = yao::random_points(30, yao::Distribution::Uniform, 5);
    const auto v = yao::is_spanner(complete(ps), 1.0);
    EXPECT_TRUE(v.is_spanner);
    EXPECT_NEAR(v.report.max_ratio, 1.0, 1e-12);
}

TEST(StretchFactor, StarClosedForm) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Point2> pts{{0, 0}};
        for (int i = 0; i < 8; ++i) pts.push_back(yao::polar(1.0, angle(rng)));
        std::vector<yao::IndexPair> spokes;
        for (std::size_t i = 1; i < pts.size(); ++i) spokes.emplace_back(0, i);
        double expected = 1.0;
        for (std::size_t i = 1; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) expected = std::max(expected, 2.0 / yao::distance(pts[i], pts[j]));
        const auto g = custom(PointSet(pts), spokes);
        EXPECT_NEAR(yao::stretch_factor(g).max_ratio, expected, 1e-9 * expected);
        EXPECT_NEAR(yao::brute_force_stretch(g).max_ratio, expected, 1e-9 * expected);
    }
}

TEST(StretchFactor, OracleEquivalence) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> size(2, 50);
    std::uniform_int_distribution<int> kind(0, 3);
    for (int i = 0; i < 200; ++i) {
        const auto ps = yao::random_points(size(rng), static_cast<yao::Distribution>(kind(rng)), 7000 + i);
        const auto g = yao::build(ps, i % 2 ? yao::Variant::YaoYao : yao::Variant::Yao, 5 + i % 4);
        const auto fast = yao::stretch_factor(g);
        const auto slow = yao::brute_force_stretch(g);
        if (fast.connected()) {
            EXPECT_NEAR(fast.max_ratio, slow.max_ratio, 1e-9);
        } else {
            EXPECT_EQ(slow.max_ratio, yao::kInfinity);
        }
        EXPECT_EQ(yao::is_spanner(g, 3.0).is_spanner, slow.max_ratio <= 3.0 + 1e-9);
    }
}

TEST(StretchFactor, WitnessPathReproducesRatio) {
    for (const auto &c : yao::testing::corpus(1)) {
        const auto g = yao::build_yao(c.points, 5);
        const auto r = yao::stretch_factor(g);
        ASSERT_TRUE(r.connected());
        ASSERT_GE(r.witness_path.size(), 2u);
        EXPECT_EQ(r.witness_path.front(), r.witness.first);
        EXPECT_EQ(r.witness_path.back(), r.witness.second);
        const auto len = yao::path_length(undirected_view(g), r.witness_path);
        ASSERT_TRUE(len.has_value());
        const double euclid = yao::distance(c.points[r.witness.first], c.points[r.witness.second]);
        EXPECT_NEAR(*len / euclid, r.max_ratio, 1e-9);
        EXPECT_GE(r.max_ratio, 1.0);
    }
}

TEST(StretchFactor, AddingEdgesNeverIncreasesStretch) {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 20; ++t) {
        const auto ps = yao::random_points(40, yao::Distribution::Uniform, 300 + t);
        auto g = yao::build_yao(ps, 5);
        double prev = yao::stretch_factor(g).max_ratio;
        auto pairs = g.edge_pairs();
        std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
        for (int add = 0; add < 10; ++add) {
            const auto a = pick(rng), b = pick(rng);
            if (a == b) continue;
            pairs.emplace_back(a, b);
            const yao::DirectedGeomGraph h(ps, {.variant = yao::Variant::Custom}, pairs);
            const double next = yao::stretch_factor(h).max_ratio;
            EXPECT_LE(next, prev + 1e-12);
            prev = next;
        }
    }
}

TEST(StretchFactor, PairRatiosOnRequest) {
    const auto g = yao::build_yao(yao::random_points(12, yao::Distribution::Uniform, 1), 5);
    yao::StretchOptions opts;
    opts.keep_pair_ratios = true;
    const auto r = yao::stretch_factor(g, opts);
    ASSERT_TRUE(r.pair_ratios.has_value());
    double mx = 0.0;
    for (const auto &row : *r.pair_ratios)
        for (double v : row)
            if (!std::isnan(v)) mx = std::max(mx, v);
    EXPECT_EQ(mx, r.max_ratio);
    EXPECT_EQ(r.pair_count, 66u);
}

TEST(StretchFactor, ResultIndependentOfWorkers) {
    const auto g = yao::build_yao(yao::random_points(150, yao::Distribution::Clustered, 9), 5);
    yao::StretchOptions one;
    one.workers = 1;
    yao::StretchOptions four;
    four.workers = 4;
    const auto a = yao::stretch_factor(g, one);
    const auto b = yao::stretch_factor(g, four);
    EXPECT_EQ(a.max_ratio, b.max_ratio);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.witness_path, b.witness_path);
}

TEST(StretchFactor, Y5UpperBoundOnCorpus) {
    const double rho = 2.0 + std::sqrt(3.0);
    for (const auto &c : yao::testing::corpus(3))
        EXPECT_TRUE(yao::is_spanner(yao::build_yao(c.points, 5), rho).is_spanner) << "seed " << c.seed;
}

TEST(BruteForce, SizeCap) {
    const auto g = yao::build_yao(yao::random_points(501, yao::Distribution::Uniform, 1), 5);
    EXPECT_THROW(yao::brute_force_stretch(g), std::length_error);
}

}// namespace
