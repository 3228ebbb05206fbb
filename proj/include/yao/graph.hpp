#pragma once

// Directed Yao and Yao-Yao graphs over a point set, plus the symmetrized
// (undirected) view and an invariant checker.

#include "yao/geometry.hpp"
#include "yao/parallel.hpp"
#include "yao/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace yao {

enum class Variant { Yao, YaoYao, Custom };

inline std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::Yao: return "yao";
        case Variant::YaoYao: return "yaoyao";
        case Variant::Custom: return "custom";
    }
    return "custom";
}

inline Variant parse_variant(std::string_view s) {
    if (s == "yao") return Variant::Yao;
    if (s == "yaoyao" || s == "yao-yao") return Variant::YaoYao;
    if (s == "custom") return Variant::Custom;
    throw std::invalid_argument("unknown graph variant '" + std::string(s) + "'");
}

struct GraphParams {
    int k = 5;
    Variant variant = Variant::Yao;
    double offset = 0.0;
    /// Set on symmetrized views: every edge is stored in both directions.
    bool symmetric = false;

    [[nodiscard]] ConeSystem cones() const { return ConeSystem(k, offset); }

    friend bool operator==(const GraphParams &, const GraphParams &) = default;
};

struct Edge {
    std::size_t src = 0;
    std::size_t dst = 0;
    double length = 0.0;

    friend bool operator==(const Edge &, const Edge &) = default;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

/// A point set together with a set of directed edges. Edges are kept sorted
/// by (src, dst) without duplicates; lengths are cached.
class DirectedGeomGraph {
public:
    DirectedGeomGraph() = default;

    DirectedGeomGraph(PointSet points, GraphParams params, const std::vector<IndexPair> &edges)
        : points_(std::move(points)), params_(params) {
        edges_.reserve(edges.size());
        for (const auto &[s, d] : edges) {
            check_endpoints(s, d);
            edges_.push_back({s, d, distance(points_[s], points_[d])});
        }
        normalize();
    }

    /// Takes edges verbatim, cached lengths included. Used for loading and
    /// for exercising validate() on corrupted input.
    static DirectedGeomGraph from_edges(PointSet points, GraphParams params, std::vector<Edge> edges) {
        DirectedGeomGraph g;
        g.points_ = std::move(points);
        g.params_ = params;
        for (const auto &e : edges) g.check_endpoints(e.src, e.dst);
        g.edges_ = std::move(edges);
        g.normalize();
        return g;
    }

    [[nodiscard]] const PointSet &point_set() const { return points_; }
    [[nodiscard]] std::span<const Point2> points() const { return points_.points(); }
    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] const GraphParams &params() const { return params_; }
    [[nodiscard]] const std::vector<Edge> &edges() const { return edges_; }

    [[nodiscard]] bool has_edge(std::size_t src, std::size_t dst) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), IndexPair{src, dst},
                                   [](const Edge &e, const IndexPair &p) { return IndexPair{e.src, e.dst} < p; });
        return it != edges_.end() && it->src == src && it->dst == dst;
    }

    [[nodiscard]] std::vector<IndexPair> edge_pairs() const {
        std::vector<IndexPair> out;
        out.reserve(edges_.size());
        for (const auto &e : edges_) out.emplace_back(e.src, e.dst);
        return out;
    }

    /// Unordered pairs {i, j} (i < j) joined by an edge in either direction.
    [[nodiscard]] std::vector<IndexPair> undirected_pairs() const {
        std::vector<IndexPair> out;
        out.reserve(edges_.size());
        for (const auto &e : edges_) out.emplace_back(std::min(e.src, e.dst), std::max(e.src, e.dst));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    [[nodiscard]] std::vector<std::size_t> out_degrees() const {
        std::vector<std::size_t> deg(size(), 0);
        for (const auto &e : edges_) ++deg[e.src];
        return deg;
    }

    [[nodiscard]] std::vector<std::size_t> in_degrees() const {
        std::vector<std::size_t> deg(size(), 0);
        for (const auto &e : edges_) ++deg[e.dst];
        return deg;
    }

    /// Degree of every vertex in the underlying undirected graph.
    [[nodiscard]] std::vector<std::size_t> undirected_degrees() const {
        std::vector<std::size_t> deg(size(), 0);
        for (const auto &[i, j] : undirected_pairs()) {
            ++deg[i];
            ++deg[j];
        }
        return deg;
    }

    friend bool operator==(const DirectedGeomGraph &, const DirectedGeomGraph &) = default;

private:
    void check_endpoints(std::size_t s, std::size_t d) const {
        if (s >= points_.size() || d >= points_.size())
            throw std::out_of_range("edge (" + std::to_string(s) + "," + std::to_string(d) + ") references a point outside 0.." +
                                    std::to_string(points_.size()));
        if (s == d) throw std::invalid_argument("self-loop at vertex " + std::to_string(s));
    }

    void normalize() {
        auto key = [](const Edge &e) { return IndexPair{e.src, e.dst}; };
        std::stable_sort(edges_.begin(), edges_.end(), [&](const Edge &a, const Edge &b) { return key(a) < key(b); });
        edges_.erase(std::unique(edges_.begin(), edges_.end(), [&](const Edge &a, const Edge &b) { return key(a) == key(b); }),
                     edges_.end());
    }

    PointSet points_;
    GraphParams params_;
    std::vector<Edge> edges_;
};

namespace detail {

inline void require_buildable(const PointSet &ps) {
    if (ps.empty()) throw std::invalid_argument("cannot build a graph on an empty point set");
}

/// For vertex p, the cone-nearest point in every cone (nullopt if empty).
inline std::vector<std::optional<std::size_t>> cone_nearest(std::span<const Point2> pts, std::size_t p,
                                                            const ConeSystem &cones) {
    std::vector<std::optional<std::size_t>> best(cones.k());
    std::vector<double> best_len(cones.k(), 0.0);
    for (std::size_t q = 0; q < pts.size(); ++q) {
        if (q == p) continue;
        const auto c = static_cast<std::size_t>(cone_index(pts[p], pts[q], cones) - 1);
        const double len = distance(pts[p], pts[q]);
        // scanning q in increasing order, strict < keeps the smaller index on ties
        if (!best[c] || len < best_len[c]) {
            best[c] = q;
            best_len[c] = len;
        }
    }
    return best;
}

}// namespace detail

/// Directed Yao graph: every point links to its nearest point (by the pair
/// ordering) in each of its k cones.
inline DirectedGeomGraph build_yao(const PointSet &ps, int k = 5, double offset = 0.0) {
    detail::require_buildable(ps);
    const ConeSystem cones(k, offset);
    const auto pts = ps.points();

    std::vector<std::vector<std::optional<std::size_t>>> per_vertex(ps.size());
    parallel_for(ps.size(), [&](std::size_t p) { per_vertex[p] = detail::cone_nearest(pts, p, cones); });

    std::vector<IndexPair> edges;
    for (std::size_t p = 0; p < ps.size(); ++p)
        for (const auto &q : per_vertex[p])
            if (q) edges.emplace_back(p, *q);

    return {ps, GraphParams{k, Variant::Yao, offset, false}, edges};
}

/// Directed Yao-Yao graph: the Yao graph, after which every vertex keeps only
/// the shortest incoming edge (by the pair ordering) from each of its cones.
inline DirectedGeomGraph build_yao_yao(const PointSet &ps, int k = 5, double offset = 0.0) {
    const auto yao = build_yao(ps, k, offset);
    const ConeSystem cones(k, offset);
    const auto pts = ps.points();

    // (target, cone of target containing the source) -> kept source
    std::map<IndexPair, std::pair<PairKey, std::size_t>> kept;
    for (const auto &e : yao.edges()) {
        const auto cone = static_cast<std::size_t>(cone_index(pts[e.dst], pts[e.src], cones));
        const auto key = make_pair_key(pts, e.src, e.dst);
        auto [it, inserted] = kept.try_emplace({e.dst, cone}, key, e.src);
        if (!inserted && key < it->second.first) it->second = {key, e.src};
    }

    std::vector<IndexPair> edges;
    edges.reserve(kept.size());
    for (const auto &[slot, entry] : kept) edges.emplace_back(entry.second, slot.first);
    return {ps, GraphParams{k, Variant::YaoYao, offset, false}, edges};
}

inline DirectedGeomGraph build(const PointSet &ps, Variant variant, int k = 5, double offset = 0.0) {
    switch (variant) {
        case Variant::Yao: return build_yao(ps, k, offset);
        case Variant::YaoYao: return build_yao_yao(ps, k, offset);
        case Variant::Custom: break;
    }
    throw std::invalid_argument("only yao and yaoyao graphs can be built from points");
}

/// Symmetrized graph: (i, j) present iff i->j or j->i was present.
inline DirectedGeomGraph undirected_view(const DirectedGeomGraph &g) {
    std::vector<Edge> edges;
    edges.reserve(2 * g.edges().size());
    for (const auto &e : g.edges()) {
        edges.push_back(e);
        edges.push_back({e.dst, e.src, e.length});
    }
    auto params = g.params();
    params.symmetric = true;
    return DirectedGeomGraph::from_edges(g.point_set(), params, std::move(edges));
}

/// One broken invariant, with whatever of vertex, cone and edge it concerns.
struct Violation {
    std::string message;
    std::optional<std::size_t> vertex;
    std::optional<int> cone;
    std::optional<IndexPair> edge;
};

inline constexpr double kEdgeLengthTolerance = 1e-12;

/// Checks the graph's invariants; an empty result means all hold.
inline std::vector<Violation> validate(const DirectedGeomGraph &g) {
    std::vector<Violation> out;
    const auto pts = g.points();

    for (const auto &e : g.edges()) {
        const double expected = distance(pts[e.src], pts[e.dst]);
        if (!(std::abs(e.length - expected) <= kEdgeLengthTolerance * std::max(1.0, expected))) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "edge " << e.src << "->" << e.dst << " caches length " << e.length << " but the points are "
                << expected << " apart";
            out.push_back({msg.str(), e.src, std::nullopt, IndexPair{e.src, e.dst}});
        }
    }

    const auto &params = g.params();
    if (params.symmetric) {
        for (const auto &e : g.edges()) {
            if (!g.has_edge(e.dst, e.src))
                out.push_back({"symmetric graph lacks reverse of edge " + std::to_string(e.src) + "->" + std::to_string(e.dst),
                               e.src, std::nullopt, IndexPair{e.src, e.dst}});
        }
        return out;
    }
    if (params.variant == Variant::Custom) return out;

    const ConeSystem cones = params.cones();
    auto per_cone = [&](bool outgoing) {
        std::map<std::pair<std::size_t, int>, std::vector<std::size_t>> slots;
        for (const auto &e : g.edges()) {
            const std::size_t owner = outgoing ? e.src : e.dst;
            const std::size_t other = outgoing ? e.dst : e.src;
            slots[{owner, cone_index(pts[owner], pts[other], cones)}].push_back(other);
        }
        for (const auto &[slot, others] : slots) {
            if (others.size() <= 1) continue;
            std::ostringstream msg;
            msg << "vertex " << slot.first << " has " << others.size() << (outgoing ? " outgoing" : " incoming")
                << " edges in cone " << slot.second << " (";
            for (std::size_t i = 0; i < others.size(); ++i) {
                if (i) msg << ", ";
                if (outgoing) msg << slot.first << "->" << others[i];
                else msg << others[i] << "->" << slot.first;
            }
            msg << ")";
            out.push_back({msg.str(), slot.first, slot.second, std::nullopt});
        }
    };
    per_cone(true);
    if (params.variant == Variant::YaoYao) per_cone(false);
    return out;
}

}// namespace yao
