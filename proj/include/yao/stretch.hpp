#pragma once

// Shortest paths and stretch factors. Stretch is measured over the
// undirected view of a graph unless StretchOptions::directed is set.

#include "yao/graph.hpp"
#include "yao/parallel.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace yao {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr std::size_t kNoVertex = std::numeric_limits<std::size_t>::max();
inline constexpr double kDefaultTolerance = 1e-9;

struct ShortestPaths {
    std::vector<double> distances;
    std::vector<std::size_t> predecessors;

    /// Vertex sequence source..target, empty if unreachable.
    [[nodiscard]] std::vector<std::size_t> path_to(std::size_t target) const {
        std::vector<std::size_t> path;
        if (distances.at(target) == kInfinity) return path;
        for (std::size_t v = target; v != kNoVertex; v = predecessors[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
    }
};

struct StretchOptions {
    bool directed = false;
    bool keep_pair_ratios = false;
    unsigned workers = worker_count();
};

struct StretchReport {
    /// +inf when some pair is unreachable.
    double max_ratio = 1.0;
    IndexPair witness{0, 0};
    std::vector<std::size_t> witness_path;
    std::size_t pair_count = 0;
    std::size_t n = 0;
    /// ratio[i][j] for every ordered pair considered, when requested; the
    /// diagonal is 1 and unconsidered entries are NaN.
    std::optional<std::vector<std::vector<double>>> pair_ratios;

    [[nodiscard]] bool connected() const { return max_ratio != kInfinity; }
};

namespace detail {

using Adjacency = std::vector<std::vector<std::pair<std::size_t, double>>>;

inline Adjacency adjacency(const DirectedGeomGraph &g, bool directed) {
    Adjacency adj(g.size());
    for (const auto &e : g.edges()) {
        adj[e.src].emplace_back(e.dst, e.length);
        if (!directed) adj[e.dst].emplace_back(e.src, e.length);
    }
    return adj;
}

inline ShortestPaths dijkstra(const Adjacency &adj, std::size_t source) {
    ShortestPaths sp{std::vector<double>(adj.size(), kInfinity), std::vector<std::size_t>(adj.size(), kNoVertex)};
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    sp.distances[source] = 0.0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (d > sp.distances[v]) continue;
        for (const auto &[w, len] : adj[v]) {
            const double nd = d + len;
            if (nd < sp.distances[w]) {
                sp.distances[w] = nd;
                sp.predecessors[w] = v;
                heap.emplace(nd, w);
            }
        }
    }
    return sp;
}

inline void require_pairs(const DirectedGeomGraph &g) {
    if (g.size() < 2)
        throw std::invalid_argument("stretch needs at least 2 points, got " + std::to_string(g.size()));
}

/// Per-source best pair, scanning targets in increasing order.
struct SourceBest {
    double ratio = -1.0;
    std::size_t target = kNoVertex;
};

/// Folds per-source maxima in source order; the earliest pair wins ties.
inline StretchReport reduce(std::size_t n, const std::vector<SourceBest> &best, std::size_t pair_count) {
    StretchReport report;
    report.n = n;
    report.pair_count = pair_count;
    report.max_ratio = -1.0;
    for (std::size_t s = 0; s < best.size(); ++s) {
        if (best[s].target != kNoVertex && best[s].ratio > report.max_ratio) {
            report.max_ratio = best[s].ratio;
            report.witness = {s, best[s].target};
        }
    }
    return report;
}

}// namespace detail

/// Single-source shortest paths over the undirected edge set (or the
/// directed one when `directed` is set).
inline ShortestPaths shortest_paths_from(const DirectedGeomGraph &g, std::size_t source, bool directed = false) {
    if (source >= g.size())
        throw std::out_of_range("source index " + std::to_string(source) + " out of range for " + std::to_string(g.size()) +
                                " points");
    return detail::dijkstra(detail::adjacency(g, directed), source);
}

/// Maximum of d_G(a, b) / |ab| over all pairs, with a witness pair and a
/// shortest path realizing it. One Dijkstra run per source.
inline StretchReport stretch_factor(const DirectedGeomGraph &g, const StretchOptions &opts = {}) {
    detail::require_pairs(g);
    const std::size_t n = g.size();
    const auto pts = g.points();
    const auto adj = detail::adjacency(g, opts.directed);

    std::vector<detail::SourceBest> best(n);
    std::vector<std::vector<double>> ratios;
    if (opts.keep_pair_ratios) ratios.assign(n, std::vector<double>(n, std::numeric_limits<double>::quiet_NaN()));

    parallel_for(
            n,
            [&](std::size_t s) {
                const auto sp = detail::dijkstra(adj, s);
                // undirected: only pairs s < t, each counted once
                for (std::size_t t = opts.directed ? 0 : s + 1; t < n; ++t) {
                    if (t == s) continue;
                    const double r = sp.distances[t] / distance(pts[s], pts[t]);
                    if (r > best[s].ratio) best[s] = {r, t};
                    if (opts.keep_pair_ratios) {
                        ratios[s][t] = r;
                        if (!opts.directed) ratios[t][s] = r;
                    }
                }
                if (opts.keep_pair_ratios) ratios[s][s] = 1.0;
            },
            opts.workers);

    const std::size_t pairs = opts.directed ? n * (n - 1) : n * (n - 1) / 2;
    auto report = detail::reduce(n, best, pairs);
    if (report.connected()) {
        const auto sp = detail::dijkstra(adj, report.witness.first);
        report.witness_path = sp.path_to(report.witness.second);
    }
    if (opts.keep_pair_ratios) report.pair_ratios = std::move(ratios);
    return report;
}

struct SpannerVerdict {
    bool is_spanner = false;
    StretchReport report;
};

inline SpannerVerdict is_spanner(const DirectedGeomGraph &g, double rho, double tolerance = kDefaultTolerance,
                                 const StretchOptions &opts = {}) {
    auto report = stretch_factor(g, opts);
    const bool ok = report.max_ratio <= rho + tolerance;
    return {ok, std::move(report)};
}

inline constexpr std::size_t kBruteForceLimit = 500;

/// Same contract as stretch_factor (undirected), computed with
/// Floyd-Warshall. Test oracle; O(n^3).
inline StretchReport brute_force_stretch(const DirectedGeomGraph &g) {
    detail::require_pairs(g);
    const std::size_t n = g.size();
    if (n > kBruteForceLimit)
        throw std::length_error("brute-force stretch is capped at " + std::to_string(kBruteForceLimit) + " points, got " +
                                std::to_string(n));
    const auto pts = g.points();

    std::vector<double> dist(n * n, kInfinity);
    std::vector<std::size_t> next(n * n, kNoVertex);
    for (std::size_t i = 0; i < n; ++i) {
        dist[i * n + i] = 0.0;
        next[i * n + i] = i;
    }
    for (const auto &e : g.edges()) {
        for (auto [a, b] : {IndexPair{e.src, e.dst}, IndexPair{e.dst, e.src}}) {
            if (e.length < dist[a * n + b]) {
                dist[a * n + b] = e.length;
                next[a * n + b] = b;
            }
        }
    }
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i) {
            const double dim = dist[i * n + m];
            if (dim == kInfinity) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const double via = dim + dist[m * n + j];
                if (via < dist[i * n + j]) {
                    dist[i * n + j] = via;
                    next[i * n + j] = next[i * n + m];
                }
            }
        }

    std::vector<detail::SourceBest> best(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s + 1; t < n; ++t) {
            const double r = dist[s * n + t] / distance(pts[s], pts[t]);
            if (r > best[s].ratio) best[s] = {r, t};
        }

    auto report = detail::reduce(n, best, n * (n - 1) / 2);
    if (report.connected()) {
        auto [s, t] = report.witness;
        report.witness_path.push_back(s);
        while (s != t) {
            s = next[s * n + t];
            report.witness_path.push_back(s);
        }
    }
    return report;
}

/// Summed edge lengths along a vertex sequence; nullopt if some step is not
/// an edge of g (in either direction).
inline std::optional<double> path_length(const DirectedGeomGraph &g, const std::vector<std::size_t> &path) {
    double total = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const auto a = path[i - 1];
        const auto b = path[i];
        if (!g.has_edge(a, b) && !g.has_edge(b, a)) return std::nullopt;
        total += distance(g.points()[a], g.points()[b]);
    }
    return total;
}

}// namespace yao
