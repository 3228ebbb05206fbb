#pragma once

// File formats: point files (JSON or CSV), graph JSON, stretch and oracle
// reports, named point sets.

#include "yao/constructions.hpp"
#include "yao/graph.hpp"
#include "yao/proof_oracles.hpp"
#include "yao/stretch.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace yao::io {

using json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw InputError("failed writing '" + path + "'");
}

// ---------------------------------------------------------------------------
// Points

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == sep) {
            out.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

inline double parse_real(std::string_view field, const std::string &where) {
    double v = 0.0;
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(v))
        throw InputError(where + ": '" + std::string(field) + "' is not a finite number");
    return v;
}

inline Point2 point_from_json(const json &j, const std::string &where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InputError(where + ": expected a point [x, y]");
    const Point2 p{j[0].get<double>(), j[1].get<double>()};
    if (!p.finite()) throw InputError(where + ": coordinates must be finite");
    return p;
}

inline PointSet::Labels labels_from_json(const json &j, std::size_t n) {
    PointSet::Labels labels;
    if (j.is_null()) return labels;
    if (!j.is_object()) throw InputError("labels must be an object {\"index\": \"label\"}");
    for (const auto &[key, value] : j.items()) {
        std::size_t index = 0;
        const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), index);
        if (ec != std::errc{} || ptr != key.data() + key.size() || index >= n)
            throw InputError("label key '" + key + "' is not a valid point index");
        if (!value.is_string()) throw InputError("label for point " + key + " must be a string");
        labels[index] = value.get<std::string>();
    }
    return labels;
}

inline json labels_to_json(const PointSet::Labels &labels) {
    json j = json::object();
    for (const auto &[i, l] : labels) j[std::to_string(i)] = l;
    return j;
}

inline json points_to_json(const PointSet &ps) {
    json j = json::array();
    for (const auto &p : ps.points()) j.push_back({p.x, p.y});
    return j;
}

}// namespace detail

/// CSV with a header `x,y` or `x,y,label`; blank lines are skipped.
inline PointSet parse_points_csv(std::string_view text, const std::string &source = "<csv>") {
    std::vector<Point2> pts;
    PointSet::Labels labels;
    std::size_t line_no = 0;
    bool header_seen = false;
    bool has_label = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const auto line = detail::trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty()) {
            if (end == text.size()) break;
            continue;
        }
        const std::string where = source + ":" + std::to_string(line_no);
        const auto fields = detail::split(line, ',');
        if (!header_seen) {
            if (fields.size() < 2 || fields.size() > 3 || fields[0] != "x" || fields[1] != "y" ||
                (fields.size() == 3 && fields[2] != "label"))
                throw InputError(where + ": expected header 'x,y' or 'x,y,label'");
            has_label = fields.size() == 3;
            header_seen = true;
            continue;
        }
        const bool width_ok = has_label ? (fields.size() == 2 || fields.size() == 3) : fields.size() == 2;
        if (!width_ok)
            throw InputError(where + ": expected " + std::string(has_label ? "3" : "2") + " fields, got " +
                             std::to_string(fields.size()));
        pts.push_back({detail::parse_real(fields[0], where), detail::parse_real(fields[1], where)});
        if (has_label && fields.size() == 3 && !fields[2].empty()) labels[pts.size() - 1] = std::string(fields[2]);
        if (end == text.size()) break;
    }
    if (!header_seen) throw InputError(source + ": empty point file");
    return PointSet(std::move(pts), std::move(labels));
}

/// Either a bare array [[x, y], ...] or an object carrying "points" and
/// optionally "labels" (named point sets and graph files both qualify).
inline PointSet parse_points_json(const json &j) {
    const json *arr = &j;
    const json *labels = nullptr;
    if (j.is_object()) {
        if (!j.contains("points")) throw InputError("JSON object has no \"points\" member");
        arr = &j.at("points");
        if (j.contains("labels")) labels = &j.at("labels");
    }
    if (!arr->is_array()) throw InputError("points must be a JSON array");
    std::vector<Point2> pts;
    pts.reserve(arr->size());
    for (std::size_t i = 0; i < arr->size(); ++i) pts.push_back(detail::point_from_json((*arr)[i], "point " + std::to_string(i)));
    auto lbl = labels ? detail::labels_from_json(*labels, pts.size()) : PointSet::Labels{};
    return PointSet(std::move(pts), std::move(lbl));
}

/// Dispatches on content: a leading '[' or '{' means JSON, otherwise CSV.
inline PointSet parse_points(std::string_view text, const std::string &source = "<input>") {
    const auto t = detail::trim(text);
    const auto first = t.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && (t[first] == '[' || t[first] == '{')) {
        json j;
        try {
            j = json::parse(t);
        } catch (const json::parse_error &e) {
            throw InputError(source + ": invalid JSON: " + e.what());
        }
        return parse_points_json(j);
    }
    return parse_points_csv(text, source);
}

inline PointSet load_points(const std::string &path) { return parse_points(read_file(path), path); }

inline std::string points_to_csv(const PointSet &ps) {
    std::ostringstream out;
    out.precision(17);
    const bool labelled = !ps.labels().empty();
    out << (labelled ? "x,y,label\n" : "x,y\n");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        out << ps[i].x << ',' << ps[i].y;
        if (labelled) out << ',' << ps.label(i).value_or("");
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Graphs

inline json graph_to_json(const DirectedGeomGraph &g) {
    json j;
    j["k"] = g.params().k;
    j["variant"] = std::string(to_string(g.params().variant));
    j["offset"] = g.params().offset;
    if (g.params().symmetric) j["symmetric"] = true;
    j["points"] = detail::points_to_json(g.point_set());
    j["labels"] = detail::labels_to_json(g.point_set().labels());
    json edges = json::array();
    for (const auto &e : g.edges()) edges.push_back({e.src, e.dst});
    j["edges"] = std::move(edges);
    return j;
}

/// Edge lengths are recomputed from the points; an optional third element
/// per edge is cross-checked against the recomputed length.
inline DirectedGeomGraph graph_from_json(const json &j) {
    if (!j.is_object()) throw InputError("graph file must be a JSON object");
    for (const char *key : {"k", "variant", "points", "edges"})
        if (!j.contains(key)) throw InputError(std::string("graph file lacks \"") + key + "\"");
    GraphParams params;
    params.k = j.at("k").get<int>();
    params.variant = parse_variant(j.at("variant").get<std::string>());
    params.offset = j.value("offset", 0.0);
    params.symmetric = j.value("symmetric", false);
    (void) ConeSystem(params.k, params.offset);

    auto ps = parse_points_json(j);
    std::vector<Edge> edges;
    const auto &arr = j.at("edges");
    if (!arr.is_array()) throw InputError("\"edges\" must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto &e = arr[i];
        if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
            e[0].get<long long>() < 0 || e[1].get<long long>() < 0 || (e.size() == 3 && !e[2].is_number()))
            throw InputError("edge " + std::to_string(i) + ": expected [src, dst] or [src, dst, length]");
        const auto s = e[0].get<std::size_t>();
        const auto d = e[1].get<std::size_t>();
        if (s >= ps.size() || d >= ps.size() || s == d)
            throw InputError("edge " + std::to_string(i) + ": invalid endpoints " + std::to_string(s) + "," + std::to_string(d));
        const double len = distance(ps[s], ps[d]);
        if (e.size() == 3) {
            const double stored = e[2].get<double>();
            if (!(std::abs(stored - len) <= kEdgeLengthTolerance * std::max(1.0, len)))
                throw InputError("edge " + std::to_string(i) + ": stored length " + std::to_string(stored) +
                                 " disagrees with point distance " + std::to_string(len));
        }
        edges.push_back({s, d, len});
    }
    return DirectedGeomGraph::from_edges(std::move(ps), params, std::move(edges));
}

inline void save_graph(const std::string &path, const DirectedGeomGraph &g) { write_file(path, graph_to_json(g).dump(2) + "\n"); }

inline DirectedGeomGraph load_graph(const std::string &path) {
    try {
        return graph_from_json(json::parse(read_file(path)));
    } catch (const json::exception &e) {
        throw InputError(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Reports

inline json real_or_inf(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return nullptr;
    return v;
}

inline json stretch_report_to_json(const StretchReport &r, const PointSet *names = nullptr) {
    json j;
    j["max_ratio"] = real_or_inf(r.max_ratio);
    j["witness"] = {r.witness.first, r.witness.second};
    if (names) j["witness_labels"] = {names->name(r.witness.first), names->name(r.witness.second)};
    j["path"] = r.witness_path;
    j["n"] = r.n;
    j["pair_count"] = r.pair_count;
    return j;
}

/// One line per considered unordered pair: i,j,ratio.
inline std::string pair_ratios_to_csv(const StretchReport &r) {
    if (!r.pair_ratios) throw std::logic_error("report was computed without per-pair ratios");
    std::ostringstream out;
    out.precision(17);
    out << "i,j,ratio\n";
    const auto &m = *r.pair_ratios;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (i == j || std::isnan(m[i][j])) continue;
            if (j < i && !std::isnan(m[j][i])) continue;
            out << i << ',' << j << ',';
            if (std::isinf(m[i][j])) out << "inf";
            else out << m[i][j];
            out << '\n';
        }
    return out.str();
}

inline json oracle_report_to_json(const proof::OracleReport &r) {
    json j;
    j["name"] = r.name;
    j["samples"] = r.samples;
    if (r.resolution) j["resolution"] = r.resolution;
    j["max_residual"] = real_or_inf(r.max_residual);
    j["violations"] = r.violations;
    json argmax = json::object();
    for (const auto &[k, v] : r.argmax_config) argmax[k] = real_or_inf(v);
    j["argmax_config"] = std::move(argmax);
    json values = json::object();
    for (const auto &[k, v] : r.values) values[k] = real_or_inf(v);
    j["values"] = std::move(values);
    j["passed"] = r.passed();
    return j;
}

inline json named_point_set_to_json(const NamedPointSet &s) {
    json j;
    j["name"] = s.name;
    j["provenance"] = std::string(to_string(s.provenance));
    json meta = json::object();
    for (const auto &[k, v] : s.metadata) meta[k] = v;
    j["metadata"] = std::move(meta);
    j["points"] = detail::points_to_json(s.points);
    j["labels"] = detail::labels_to_json(s.points.labels());
    return j;
}

inline NamedPointSet named_point_set_from_json(const json &j) {
    NamedPointSet s;
    s.name = j.value("name", std::string{});
    s.provenance = parse_provenance(j.value("provenance", std::string("generated")));
    if (j.contains("metadata"))
        for (const auto &[k, v] : j.at("metadata").items()) s.metadata[k] = v.get<std::string>();
    s.points = parse_points_json(j);
    return s;
}

}// namespace yao::io
