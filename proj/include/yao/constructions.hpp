#pragma once

// Fixed point configurations: the 34-point set whose five-cone Yao graph has
// stretch above 2.87, and a corridor family on which the five-cone Yao-Yao
// graph has stretch growing without bound.

#include "yao/graph.hpp"
#include "yao/point_set.hpp"
#include "yao/stretch.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace yao {

enum class Provenance { FixedTable, CorridorSeed, Generated };

inline std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::FixedTable: return "fixed-table";
        case Provenance::CorridorSeed: return "corridor-seed";
        case Provenance::Generated: return "generated";
    }
    return "generated";
}

inline Provenance parse_provenance(std::string_view s) {
    if (s == "fixed-table") return Provenance::FixedTable;
    if (s == "corridor-seed") return Provenance::CorridorSeed;
    if (s == "generated") return Provenance::Generated;
    throw std::invalid_argument("unknown provenance '" + std::string(s) + "'");
}

struct NamedPointSet {
    std::string name;
    PointSet points;
    Provenance provenance = Provenance::Generated;
    /// Free-form construction parameters (recorded in generated files).
    std::map<std::string, std::string> metadata;
};

// ---------------------------------------------------------------------------

inline constexpr std::array<std::array<int, 2>, 34> kLowerBoundY5Coordinates{{
        {0, 0},     {252, 82},   {130, 230},  {12, 193},   {30, 302},  {293, 269}, {321, 229},
        {-143, 130}, {-143, 80}, {193, 384},  {158, 367},  {-135, 272}, {-91, 287}, {-153, -55},
        {371, 75},  {410, 115},  {334, 276},  {341, 264},  {-179, 97}, {-180, 112}, {-91, -75},
        {316, 36},  {352, 229},  {303, 297},  {-167, 63},  {-167, 147}, {-26, -75}, {371, 213},
        {51, 310},  {-176, 37},  {344, 274},  {-189, 105}, {99, 320},  {-15, 284},
}};

/// Fixed 34-point lower-bound configuration; u, v, z, w label the first four points.
inline NamedPointSet lower_bound_y5() {
    std::vector<Point2> pts;
    pts.reserve(kLowerBoundY5Coordinates.size());
    for (const auto &[x, y] : kLowerBoundY5Coordinates) pts.push_back({static_cast<double>(x), static_cast<double>(y)});
    PointSet::Labels labels{{0, "u"}, {1, "v"}, {2, "z"}, {3, "w"}};
    return {"lower-bound-y5", PointSet(std::move(pts), std::move(labels)), Provenance::FixedTable, {}};
}

// ---------------------------------------------------------------------------
// Yao-Yao corridor. Two rows of points leave a = (0,0) and b = (1.3, 3.5)
// towards the right, converging slightly. Each level adds five points per
// row at spacing 2.6: four intermediate points and the level's far end
// (a0, b0). Level 1 is the seed gadget with rays at +-1 degree.
// Level l continues each row from the previous far end with the convergence
// angle halved, so the rows never meet and the gap stays in (2.59, 3.5].
// Only the last far ends are joined across the corridor, so the shortest
// a-b path walks every row point.

struct CorridorLayout {
    double seed_ray_length = 13.0;
    double spacing = 2.6;
    Point2 a{0.0, 0.0};
    Point2 b{1.3, 3.5};
    double seed_angle = std::numbers::pi / 180.0;
    /// Convergence angle of level l is seed_angle * angle_decay^(l-1).
    double angle_decay = 0.5;
};

class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string level_label(const char *stem, int level) {
    return level == 1 ? std::string(stem) : std::string(stem) + "." + std::to_string(level);
}

}// namespace detail

/// Row membership of corridor points, for self-validation and reports.
struct CorridorRows {
    std::vector<std::size_t> bottom;// a, ..., far end of the bottom row
    std::vector<std::size_t> top;   // b, ..., far end of the top row
};

/// Recovers the rows of a generated corridor from its labels.
inline CorridorRows corridor_rows(const PointSet &ps) {
    CorridorRows rows;
    for (const auto &[i, label] : ps.labels()) {
        if (label.starts_with('a')) rows.bottom.push_back(i);
        else if (label.starts_with('b')) rows.top.push_back(i);
    }
    auto by_x = [&](std::size_t i, std::size_t j) { return ps[i].x < ps[j].x; };
    std::sort(rows.bottom.begin(), rows.bottom.end(), by_x);
    std::sort(rows.top.begin(), rows.top.end(), by_x);
    return rows;
}

/// Builds the five-cone Yao-Yao graph on a corridor and checks that it is
/// connected, that the only edge between the rows joins the two far ends,
/// and that the shortest a-b path has the full corridor length. Throws
/// ConstructionError naming the first offending edge otherwise.
inline void validate_corridor(const PointSet &ps) {
    const auto rows = corridor_rows(ps);
    if (rows.bottom.size() < 2 || rows.top.size() < 2) throw ConstructionError("corridor rows are missing");
    const auto g = build_yao_yao(ps, 5, 0.0);
    if (const auto v = validate(g); !v.empty()) throw ConstructionError("Yao-Yao graph is invalid: " + v.front().message);

    std::vector<int> row(ps.size(), -1);
    for (auto i : rows.bottom) row[i] = 0;
    for (auto i : rows.top) row[i] = 1;
    const IndexPair rung{std::min(rows.bottom.back(), rows.top.back()), std::max(rows.bottom.back(), rows.top.back())};
    bool rung_present = false;
    for (const auto &[i, j] : g.undirected_pairs()) {
        if (row[i] == row[j]) continue;
        if (IndexPair{i, j} == rung) {
            rung_present = true;
            continue;
        }
        throw ConstructionError("shortcut edge survives pruning: " + ps.name(i) + " - " + ps.name(j) + " (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
    }
    if (!rung_present) throw ConstructionError("far ends " + ps.name(rung.first) + " and " + ps.name(rung.second) + " are not joined");

    const auto sp = shortest_paths_from(g, rows.bottom.front());
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (sp.distances[i] == kInfinity) throw ConstructionError("corridor graph is disconnected at " + ps.name(i));

    double corridor = distance(ps[rows.bottom.back()], ps[rows.top.back()]);
    for (const auto *r : {&rows.bottom, &rows.top})
        for (std::size_t i = 1; i < r->size(); ++i) corridor += distance(ps[(*r)[i - 1]], ps[(*r)[i]]);
    const double ab = sp.distances[rows.top.front()];
    if (std::abs(ab - corridor) > 1e-9 * corridor)
        throw ConstructionError("shortest a-b path (" + std::to_string(ab) + ") skips part of the corridor (" +
                                std::to_string(corridor) + ")");
}

/// Corridor with `levels` gadgets. Points are ordered a, b, then per level
/// the far ends followed by the four intermediate points of each row, which
/// gives the order a, b, a0, b0, a1..a4, b1..b4 at level 1.
inline NamedPointSet yy5_unbounded_family(int levels, const CorridorLayout &layout = {}) {
    if (levels < 1) throw std::invalid_argument("corridor needs at least one level, got " + std::to_string(levels));

    std::vector<Point2> pts{layout.a, layout.b};
    PointSet::Labels labels{{0, "a"}, {1, "b"}};
    Point2 bottom = layout.a;
    Point2 top = layout.b;
    double angle = layout.seed_angle;
    const int per_row = static_cast<int>(std::lround(layout.seed_ray_length / layout.spacing));

    for (int level = 1; level <= levels; ++level) {
        const Point2 bottom_end = bottom + polar(layout.seed_ray_length, angle);
        const Point2 top_end = top + polar(layout.seed_ray_length, -angle);
        labels[pts.size()] = detail::level_label("a0", level);
        pts.push_back(bottom_end);
        labels[pts.size()] = detail::level_label("b0", level);
        pts.push_back(top_end);
        for (const auto &[start, dir, stem] : {std::tuple{bottom, angle, 'a'}, std::tuple{top, -angle, 'b'}}) {
            for (int m = 1; m < per_row; ++m) {
                labels[pts.size()] = detail::level_label((std::string(1, stem) + std::to_string(m)).c_str(), level);
                pts.push_back(start + polar(layout.spacing * m, dir));
            }
        }
        bottom = bottom_end;
        top = top_end;
        angle *= layout.angle_decay;
    }

    NamedPointSet out{"yy5-corridor-" + std::to_string(levels), PointSet(std::move(pts), std::move(labels)),
                      levels == 1 ? Provenance::CorridorSeed : Provenance::Generated,
                      {{"levels", std::to_string(levels)},
                       {"extension", "translated rows, convergence angle decay " + std::to_string(layout.angle_decay)},
                       {"spacing", std::to_string(layout.spacing)},
                       {"ray_length", std::to_string(layout.seed_ray_length)}}};
    validate_corridor(out.points);
    return out;
}

}// namespace yao
