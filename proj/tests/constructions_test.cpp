#include "yao/yao.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace {

using yao::Point2;

constexpr double kLowerBoundStretch = 2.8766265012969177;
constexpr double kCorridorStretch[] = {7.8508115698396326, 14.758991914684884, 21.695230307346353,
                                       28.645294206204667, 35.60221252158474};

TEST(LowerBound, Contents) {
    const auto set = yao::lower_bound_y5();
    EXPECT_EQ(set.points.size(), 34u);
    EXPECT_EQ(set.provenance, yao::Provenance::FixedTable);
    EXPECT_EQ(set.points[0], (Point2{0, 0}));
    EXPECT_EQ(set.points[1], (Point2{252, 82}));
    EXPECT_EQ(set.points[2], (Point2{130, 230}));
    EXPECT_EQ(set.points[3], (Point2{12, 193}));
    EXPECT_EQ(set.points[33], (Point2{-15, 284}));
    EXPECT_EQ(set.points.label(0), "u");
    EXPECT_EQ(set.points.label(1), "v");
    EXPECT_EQ(set.points.label(2), "z");
    EXPECT_EQ(set.points.label(3), "w");
    EXPECT_EQ(yao::lower_bound_y5().points, set.points);
}

TEST(LowerBound, GoldenStretch) {
    const auto set = yao::lower_bound_y5();
    const auto g = yao::build_yao(set.points, 5);
    const auto fast = yao::stretch_factor(g);
    const auto slow = yao::brute_force_stretch(g);
    EXPECT_NEAR(slow.max_ratio, kLowerBoundStretch, 1e-9);
    EXPECT_NEAR(fast.max_ratio, kLowerBoundStretch, 1e-9);
    EXPECT_GT(fast.max_ratio, 2.87);
    EXPECT_LE(fast.max_ratio, 2.0 + std::sqrt(3.0) + 1e-9);
    EXPECT_EQ(fast.witness, (yao::IndexPair{0, 1}));
    EXPECT_EQ(slow.witness, (yao::IndexPair{0, 1}));
}

TEST(Corridor, SeedGadgetGeometry) {
    const auto fam = yao::yy5_unbounded_family(1);
    const auto &ps = fam.points;
    ASSERT_EQ(ps.size(), 12u);
    EXPECT_EQ(fam.provenance, yao::Provenance::CorridorSeed);
    const double deg = std::numbers::pi / 180.0;
    EXPECT_EQ(ps[0], (Point2{0, 0}));
    EXPECT_EQ(ps[1], (Point2{1.3, 3.5}));
    EXPECT_EQ(ps.label(2), "a0");
    EXPECT_EQ(ps.label(3), "b0");
    EXPECT_NEAR(ps[2].x, 13.0 * std::cos(deg), 1e-12);
    EXPECT_NEAR(ps[2].y, 13.0 * std::sin(deg), 1e-12);
    EXPECT_NEAR(ps[3].x, 1.3 + 13.0 * std::cos(deg), 1e-12);
    EXPECT_NEAR(ps[3].y, 3.5 - 13.0 * std::sin(deg), 1e-12);
    for (int m = 1; m <= 4; ++m) {
        const auto ai = *ps.find_label("a" + std::to_string(m));
        const auto bi = *ps.find_label("b" + std::to_string(m));
        EXPECT_NEAR(yao::distance(ps[0], ps[ai]), 2.6 * m, 1e-12);
        EXPECT_NEAR(yao::distance(ps[1], ps[bi]), 2.6 * m, 1e-12);
    }
    EXPECT_NEAR(yao::distance(ps[0], ps[1]), 3.7336309405188937, 1e-12);
}

TEST(Corridor, Level1Stretch) {
    const auto fam = yao::yy5_unbounded_family(1);
    const auto g = yao::build_yao_yao(fam.points, 5);
    const auto r = yao::stretch_factor(g);
    EXPECT_NEAR(r.max_ratio, kCorridorStretch[0], 1e-9);
    EXPECT_NEAR(yao::brute_force_stretch(g).max_ratio, kCorridorStretch[0], 1e-9);
    EXPECT_GT(r.max_ratio, 3.74);
    EXPECT_EQ(r.witness, (yao::IndexPair{0, 1}));
    const double ab = yao::distance(fam.points[0], fam.points[1]);
    const double a0b0 = yao::distance(fam.points[2], fam.points[3]);
    EXPECT_NEAR(r.max_ratio, (26.0 + a0b0) / ab, 1e-9);
    EXPECT_FALSE(yao::is_spanner(g, 3.74).is_spanner);
}

TEST(Corridor, GrowsWithLevels) {
    double prev = 0.0;
    for (int level = 1; level <= 5; ++level) {
        const auto fam = yao::yy5_unbounded_family(level);
        EXPECT_EQ(fam.points.size(), 2u + 10u * static_cast<std::size_t>(level));
        const auto g = yao::build_yao_yao(fam.points, 5);
        EXPECT_TRUE(yao::validate(g).empty());
        const double r = yao::stretch_factor(g).max_ratio;
        EXPECT_NEAR(r, kCorridorStretch[level - 1], 1e-9 * r);
        EXPECT_GT(r, prev);
        prev = r;
        if (level > 1) {
            EXPECT_EQ(fam.provenance, yao::Provenance::Generated);
            EXPECT_TRUE(fam.points.find_label("a0." + std::to_string(level)).has_value());
        }
        EXPECT_EQ(fam.metadata.at("levels"), std::to_string(level));
    }
    EXPECT_GE(prev, 2.0 * kCorridorStretch[0]);
}

TEST(Corridor, YaoGraphIsNotStretched) {
    // without pruning the rows are joined by short rungs
    const auto fam = yao::yy5_unbounded_family(3);
    EXPECT_LT(yao::stretch_factor(yao::build_yao(fam.points, 5)).max_ratio, 2.0 + std::sqrt(3.0));
}

TEST(Corridor, SelfValidationRejectsShortcuts) {
    // rows far apart and parallel: the pruned graph keeps rungs between them
    yao::CorridorLayout flat;
    flat.seed_angle = 0.0;
    flat.b = {1.3, 2.0};
    EXPECT_THROW(yao::yy5_unbounded_family(1, flat), yao::ConstructionError);
    // constant convergence brings the rows together by level 3
    yao::CorridorLayout constant;
    constant.angle_decay = 1.0;
    try {
        yao::yy5_unbounded_family(3, constant);
        FAIL() << "expected a construction error";
    } catch (const yao::ConstructionError &e) {
        EXPECT_NE(std::string(e.what()).find(" - "), std::string::npos) << e.what();
    }
    EXPECT_THROW(yao::yy5_unbounded_family(0), std::invalid_argument);
}

TEST(Provenance, Names) {
    for (auto p : {yao::Provenance::FixedTable, yao::Provenance::CorridorSeed, yao::Provenance::Generated})
        EXPECT_EQ(yao::parse_provenance(yao::to_string(p)), p);
    EXPECT_EQ(yao::to_string(yao::Provenance::FixedTable), "fixed-table");
    EXPECT_THROW(yao::parse_provenance("scan"), std::invalid_argument);
}

}// namespace
