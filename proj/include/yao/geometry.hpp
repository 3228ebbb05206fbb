#pragma once

// Planar primitives: points, cone systems, the pair ordering and rigid
// transforms. Angles are radians everywhere.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace yao {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2 &, const Point2 &) = default;

    [[nodiscard]] bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

/// Vector of the given length pointing along `angle`.
inline Point2 polar(double length, double angle) {
    return {length * std::cos(angle), length * std::sin(angle)};
}

inline double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Reduces an angle into [0, 2pi).
inline double normalize_angle(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

class DegenerateDirection : public std::domain_error {
public:
    DegenerateDirection() : std::domain_error("degenerate direction") {}
};

/// Direction angle of the ray from -> to, in [0, 2pi).
inline double direction(Point2 from, Point2 to) {
    if (from == to) throw DegenerateDirection{};
    return normalize_angle(std::atan2(to.y - from.y, to.x - from.x));
}

/// k equal cones of angle 2pi/k around every apex, labelled 1..k
/// counterclockwise. Cone i covers the half-open interval
/// [offset + (i-1)*2pi/k, offset + i*2pi/k).
class ConeSystem {
public:
    explicit ConeSystem(int k = 5, double rotation_offset = 0.0) : k_(k), offset_(rotation_offset) {
        if (k < 2) throw std::invalid_argument("cone count must be at least 2, got " + std::to_string(k));
        if (!std::isfinite(rotation_offset)) throw std::invalid_argument("cone rotation offset must be finite");
    }

    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] double offset() const { return offset_; }
    [[nodiscard]] double width() const { return kTwoPi / k_; }

    /// Cone (1..k) containing a direction angle.
    [[nodiscard]] int index_of(double angle) const {
        const double rel = normalize_angle(angle - offset_);
        auto sector = static_cast<int>(std::floor(rel / width()));
        // rel < 2pi always, but rel / width may round up to k
        if (sector >= k_) sector = k_ - 1;
        return sector + 1;
    }

    [[nodiscard]] double start_ray(int cone) const { return normalize_angle(offset_ + (cone - 1) * width()); }
    [[nodiscard]] double end_ray(int cone) const { return normalize_angle(offset_ + cone * width()); }
    [[nodiscard]] double bisector(int cone) const { return normalize_angle(offset_ + (cone - 0.5) * width()); }

    friend bool operator==(const ConeSystem &, const ConeSystem &) = default;

private:
    int k_;
    double offset_;
};

/// Cone of `apex` that contains `target`.
inline int cone_index(Point2 apex, Point2 target, const ConeSystem &cones) {
    return cones.index_of(direction(apex, target));
}

/// Counterclockwise angle from ray y->x to ray y->z, in [0, 2pi).
inline double angle_ccw(Point2 x, Point2 y, Point2 z) {
    if (x == y || z == y) throw DegenerateDirection{};
    const Point2 a = x - y;
    const Point2 b = z - y;
    return normalize_angle(std::atan2(cross(a, b), dot(a, b)));
}

/// Unsigned magnitude |xyz| in [0, pi].
inline double angle_magnitude(Point2 x, Point2 y, Point2 z) {
    const double t = angle_ccw(x, y, z);
    return std::min(t, kTwoPi - t);
}

inline Point2 rotate(Point2 p, Point2 center, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Point2 d = p - center;
    return {center.x + c * d.x - s * d.y, center.y + s * d.x + c * d.y};
}

inline std::vector<Point2> rotate(std::span<const Point2> points, Point2 center, double angle) {
    std::vector<Point2> out;
    out.reserve(points.size());
    for (const auto &p : points) out.push_back(rotate(p, center, angle));
    return out;
}

/// Reflection across the line through `axis_point` with direction `axis_angle`.
inline Point2 mirror(Point2 p, Point2 axis_point, double axis_angle) {
    const double c = std::cos(2.0 * axis_angle);
    const double s = std::sin(2.0 * axis_angle);
    const Point2 d = p - axis_point;
    return {axis_point.x + c * d.x + s * d.y, axis_point.y + s * d.x - c * d.y};
}

inline std::vector<Point2> mirror(std::span<const Point2> points, Point2 axis_point, double axis_angle) {
    std::vector<Point2> out;
    out.reserve(points.size());
    for (const auto &p : points) out.push_back(mirror(p, axis_point, axis_angle));
    return out;
}

/// Key of an unordered index pair under the ordering: distance first, then
/// the sorted index pair lexicographically.
struct PairKey {
    double length = 0.0;
    std::size_t lo = 0;
    std::size_t hi = 0;

    friend auto operator<=>(const PairKey &, const PairKey &) = default;
};

inline PairKey make_pair_key(std::span<const Point2> points, std::size_t a, std::size_t b) {
    return {distance(points[a], points[b]), std::min(a, b), std::max(a, b)};
}

/// Strict total order on unordered pairs of indices into a point list.
class PairOrdering {
public:
    explicit PairOrdering(std::span<const Point2> points) : points_(points) {}

    struct Pair {
        std::size_t a;
        std::size_t b;
    };

    bool operator()(Pair lhs, Pair rhs) const {
        return make_pair_key(points_, lhs.a, lhs.b) < make_pair_key(points_, rhs.a, rhs.b);
    }

private:
    std::span<const Point2> points_;
};

}// namespace yao
