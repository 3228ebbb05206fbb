#pragma once

// Numeric checks of the constants, lemmas and inequalities behind the
// (2 + sqrt 3) stretch bound for five-cone Yao graphs. Conclusions are
// verified by direct evaluation, grid maximization and seeded fuzzing.

#include "yao/geometry.hpp"
#include "yao/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace yao::proof {

inline constexpr double kInequalityTolerance = 1e-9;
inline constexpr double kEqualityTolerance = 1e-6;
inline constexpr double kIdentityTolerance = 1e-12;

struct SpannerConstants {
    double rho;
    double theta_bar;
    /// Upper bound on |wz| when both single-detour bounds fail: 2 cos(theta_bar) - 1.
    double prop1_bound;
    double c1;
    double c2;
};

inline const SpannerConstants &constants() {
    static const SpannerConstants k = [] {
        const double rho = 2.0 + std::numbers::sqrt3;
        const double theta_bar = std::acos(std::numbers::sqrt3 - 1.0);
        return SpannerConstants{
                rho,
                theta_bar,
                2.0 * std::cos(theta_bar) - 1.0,
                2.0 * rho * rho / (rho * rho - 1.0),
                1.0 / std::sin(3.0 * std::numbers::pi / 5.0),
        };
    }();
    return k;
}

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Outcome of one campaign, sweep or constant check. `max_residual` is the
/// largest signed slack (lhs - rhs) seen; positive means a violation.
struct OracleReport {
    std::string name;
    std::uint64_t samples = 0;
    std::uint64_t resolution = 0;
    double max_residual = -std::numeric_limits<double>::infinity();
    std::uint64_t violations = 0;
    std::map<std::string, double> argmax_config{};
    std::map<std::string, double> values{};

    [[nodiscard]] bool passed() const { return violations == 0; }
};

struct CheckResult {
    bool holds = false;
    double residual = 0.0;
};

// ---------------------------------------------------------------------------
// Constants

inline OracleReport verify_constants() {
    const auto &k = constants();
    OracleReport r{.name = "constants"};
    auto identity = [&](const std::string &label, double lhs, double rhs) {
        const double res = std::abs(lhs - rhs);
        r.values["residual." + label] = res;
        r.max_residual = std::max(r.max_residual, res);
        ++r.samples;
        if (!(res <= kIdentityTolerance)) ++r.violations;
    };
    auto positive = [&](const std::string &label, double value) {
        r.values[label] = value;
        ++r.samples;
        if (!(value > 0.0)) ++r.violations;
    };

    const double pi = std::numbers::pi;
    identity("rho_eq_2_plus_sqrt3", k.rho, 2.0 + std::sqrt(3.0));
    identity("rho_eq_inv_one_minus_cos", k.rho, 1.0 / (1.0 - std::cos(k.theta_bar)));
    identity("rho_eq_inv_one_minus_2sin_half", k.rho, 1.0 / (1.0 - 2.0 * std::sin(k.theta_bar / 2.0)));
    identity("cos_theta_bar_eq_1_minus_inv_rho", std::cos(k.theta_bar), 1.0 - 1.0 / k.rho);
    identity("prop1_bound_eq_2sqrt3_minus_3", k.prop1_bound, 2.0 * std::sqrt(3.0) - 3.0);
    identity("c1_eq_2rho2_over_rho2_minus_1", k.c1, 2.0 * k.rho * k.rho / (k.rho * k.rho - 1.0));
    identity("two_detours_close_to_rho", 1.0 + 1.0 + k.rho * k.prop1_bound, k.rho);

    // theta_bar rounds to 0.75
    positive("theta_bar_rounds_to_0.75", 0.005 - std::abs(k.theta_bar - 0.75));
    // the rounded bounds 2.1 and 1.1 under- and over-estimate c1 and c2
    positive("c1_minus_2.1", k.c1 - 2.1);
    positive("1.1_minus_c2", 1.1 - k.c2);
    positive("x1_convexity_lower_bound",
             -k.c2 * std::sin(3.0 * pi / 10.0) + k.c1 * std::cos(3.0 * pi / 5.0 - k.theta_bar));
    positive("y1_convexity_lower_bound",
             -k.c2 * std::sin(3.0 * pi / 5.0 - k.theta_bar) + k.c1 * std::cos(3.0 * pi / 10.0));

    r.values["rho"] = k.rho;
    r.values["theta_bar"] = k.theta_bar;
    r.values["prop1_bound"] = k.prop1_bound;
    r.values["c1"] = k.c1;
    r.values["c2"] = k.c2;
    // same expression with the rounded 1.1 / 2.1 substituted (informational)
    r.values["x1_convexity_literal_constants"] =
            -1.1 * std::sin(3.0 * pi / 10.0) + 2.1 * std::cos(3.0 * pi / 5.0 - k.theta_bar);
    return r;
}

// ---------------------------------------------------------------------------
// Single-detour bound: |ac| + lambda |bc| <= lambda |ab| for |ac| <= |ab|,
// |bac| <= theta < pi/3, lambda = 1 / (1 - 2 sin(theta/2)).

inline double lemma1_lambda(double theta) { return 1.0 / (1.0 - 2.0 * std::sin(theta / 2.0)); }

/// The radical form (1 + sqrt(2 - 2cos t)) / (2cos t - 1) of the same constant.
inline double lemma1_t(double theta) {
    const double c = std::cos(theta);
    return (1.0 + std::sqrt(2.0 - 2.0 * c)) / (2.0 * c - 1.0);
}

/// |t(theta) - lambda(theta)|.
inline double check_lemma1_identity(double theta) {
    if (!(theta > 0.0 && theta < std::numbers::pi / 3.0))
        throw PreconditionError("theta must lie in (0, pi/3), got " + std::to_string(theta));
    return std::abs(lemma1_t(theta) - lemma1_lambda(theta));
}

struct Lemma1Instance {
    Point2 a, b, c;
    double theta = 0.0;
    double lambda = 0.0;

    /// Takes theta as the actual angle |bac|.
    static Lemma1Instance from_points(Point2 a, Point2 b, Point2 c) {
        const double theta = angle_magnitude(b, a, c);
        return {a, b, c, theta, lemma1_lambda(theta)};
    }

    void validate() const {
        if (a == b || a == c || b == c) throw PreconditionError("single-detour bound needs three distinct points");
        if (!(distance(a, c) <= distance(a, b))) throw PreconditionError("single-detour bound needs |ac| <= |ab|");
        if (!(theta > 0.0 && theta < std::numbers::pi / 3.0)) throw PreconditionError("single-detour bound needs theta in (0, pi/3)");
        if (!(angle_magnitude(b, a, c) <= theta + 1e-9)) throw PreconditionError("angle bac exceeds theta");
        if (!(std::abs(lambda - lemma1_lambda(theta)) <= 1e-12 * lambda))
            throw PreconditionError("lambda does not match theta");
    }
};

inline CheckResult check_lemma1(const Lemma1Instance &inst, double tolerance = kInequalityTolerance) {
    inst.validate();
    const double lhs = distance(inst.a, inst.c) + inst.lambda * distance(inst.b, inst.c);
    const double residual = lhs - inst.lambda * distance(inst.a, inst.b);
    return {residual <= tolerance, residual};
}

// ---------------------------------------------------------------------------
// Segment bound: with |ac|/|ab| = (2 l^2 cos t - 2 l)/(l^2 - 1), every d on
// segment ac has |ad| + l |bd| <= l |ab|, with equality at d = c.

inline double lemma2_ratio(double lambda, double theta) {
    return (2.0 * lambda * lambda * std::cos(theta) - 2.0 * lambda) / (lambda * lambda - 1.0);
}

struct Lemma2Instance {
    Point2 a, b, c;
    double theta = 0.0;
    double lambda = 0.0;
    Point2 d;

    /// a at `origin`, b at distance ab_length along `rotation`, c at angle
    /// theta from ab with the prescribed |ac|, d = a + s (c - a).
    static Lemma2Instance make(double lambda, double theta, double s, double ab_length = 1.0, Point2 origin = {},
                               double rotation = 0.0) {
        const Point2 a = origin;
        const Point2 b = a + polar(ab_length, rotation);
        const Point2 c = a + polar(lemma2_ratio(lambda, theta) * ab_length, rotation + theta);
        return {a, b, c, theta, lambda, a + s * (c - a)};
    }

    void validate() const {
        if (!(lambda > 1.0)) throw PreconditionError("segment bound needs lambda > 1");
        if (!(std::cos(theta) > 1.0 / lambda)) throw PreconditionError("segment bound needs cos(theta) > 1/lambda");
        const double ab = distance(a, b);
        const double ac = distance(a, c);
        if (!(ab > 0.0 && ac > 0.0)) throw PreconditionError("segment bound needs a distinct from b and c");
        if (!(distance(b, c) < ab)) throw PreconditionError("segment bound needs |bc| < |ab|");
        if (!(std::abs(ac / ab - lemma2_ratio(lambda, theta)) <= 1e-9 * std::max(1.0, lemma2_ratio(lambda, theta))))
            throw PreconditionError("|ac|/|ab| does not match the prescribed ratio");
        if (!(std::abs(angle_magnitude(b, a, c) - theta) <= 1e-9)) throw PreconditionError("theta does not match |bac|");
        const Point2 ad = d - a;
        const Point2 dir = c - a;
        const double s = dot(ad, dir) / dot(dir, dir);
        if (!(s >= -1e-12 && s <= 1.0 + 1e-12) || !(std::abs(cross(ad, dir)) <= 1e-9 * dot(dir, dir)))
            throw PreconditionError("d is not on segment ac");
    }
};

struct Lemma2Result {
    bool holds = false;
    double residual = 0.0;
    bool at_endpoint = false;
};

/// Holds iff the inequality has slack within `tolerance`; at d = c the
/// residual must also vanish to within kEqualityTolerance.
inline Lemma2Result check_lemma2(const Lemma2Instance &inst, double tolerance = kInequalityTolerance) {
    inst.validate();
    const double ab = distance(inst.a, inst.b);
    const double residual = distance(inst.a, inst.d) + inst.lambda * distance(inst.b, inst.d) - inst.lambda * ab;
    const bool endpoint = distance(inst.d, inst.c) <= 1e-12 * ab;
    bool holds = residual <= tolerance;
    if (endpoint) holds = holds && std::abs(residual) <= kEqualityTolerance;
    return {holds, residual, endpoint};
}

/// Largest decrease of |ad| / (|ab| - |bd|) between consecutive samples of d
/// along ac, s from s_min to 1. Non-positive means monotone.
inline double lemma2_monotonicity_drop(double lambda, double theta, std::size_t steps, double s_min = 0.01) {
    double worst = -std::numeric_limits<double>::infinity();
    double prev = 0.0;
    for (std::size_t i = 0; i <= steps; ++i) {
        const double s = s_min + (1.0 - s_min) * static_cast<double>(i) / static_cast<double>(steps);
        const auto inst = Lemma2Instance::make(lambda, theta, s);
        const double f = distance(inst.a, inst.d) / (distance(inst.a, inst.b) - distance(inst.b, inst.d));
        if (i > 0) worst = std::max(worst, prev - f);
        prev = f;
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Seeded campaigns. Samples are drawn in fixed-size chunks, each with its own
// generator seeded from (seed, chunk), so results do not depend on the
// number of workers.

namespace detail {

inline constexpr std::size_t kChunk = 8192;

struct Accumulator {
    std::uint64_t samples = 0;
    std::uint64_t violations = 0;
    double max_residual = -std::numeric_limits<double>::infinity();
    std::map<std::string, double> argmax;
    std::map<std::string, double> counters;

    void observe(double residual, bool violated, const std::map<std::string, double> &config) {
        ++samples;
        if (violated) ++violations;
        if (residual > max_residual) {
            max_residual = residual;
            argmax = config;
        }
    }

    void merge(const Accumulator &o) {
        samples += o.samples;
        violations += o.violations;
        if (o.max_residual > max_residual) {
            max_residual = o.max_residual;
            argmax = o.argmax;
        }
        for (const auto &[key, v] : o.counters) {
            if (key.starts_with("max.")) {
                auto [it, fresh] = counters.try_emplace(key, v);
                if (!fresh) it->second = std::max(it->second, v);
            } else {
                counters[key] += v;
            }
        }
    }
};

template<typename Sampler>
Accumulator run_campaign(std::uint64_t seed, std::uint64_t n, Sampler &&sample) {
    const std::size_t chunks = static_cast<std::size_t>((n + kChunk - 1) / kChunk);
    std::vector<Accumulator> parts(chunks);
    parallel_for(chunks, [&](std::size_t chunk) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
        std::mt19937_64 rng(seq);
        const std::uint64_t begin = chunk * kChunk;
        const std::uint64_t end = std::min<std::uint64_t>(n, begin + kChunk);
        for (std::uint64_t i = begin; i < end; ++i) sample(rng, parts[chunk]);
    });
    Accumulator total;
    for (const auto &p : parts) total.merge(p);
    return total;
}

inline OracleReport to_report(std::string name, const Accumulator &acc) {
    OracleReport r{.name = std::move(name)};
    r.samples = acc.samples;
    r.violations = acc.violations;
    r.max_residual = acc.max_residual;
    r.argmax_config = acc.argmax;
    r.values = acc.counters;
    return r;
}

inline double uniform(std::mt19937_64 &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}// namespace detail

/// Random single-detour instances: theta in (0.01, pi/3 - 0.01), |ac| in (0, |ab|],
/// random scale, rotation and translation.
inline OracleReport fuzz_lemma1(std::uint64_t seed, std::uint64_t n, double tolerance = kInequalityTolerance) {
    using detail::uniform;
    const double pi = std::numbers::pi;
    auto acc = detail::run_campaign(seed, n, [&](std::mt19937_64 &rng, detail::Accumulator &a) {
        for (;;) {
            const double theta = uniform(rng, 0.01, pi / 3.0 - 0.01);
            const double ab = uniform(rng, 0.1, 10.0);
            // (0, 1] for the |ac| / |ab| ratio
            const double ratio = 1.0 - uniform(rng, 0.0, 1.0);
            const double rot = uniform(rng, 0.0, 2.0 * pi);
            const double side = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
            const Point2 origin{uniform(rng, -100.0, 100.0), uniform(rng, -100.0, 100.0)};
            const Point2 b = origin + polar(ab, rot);
            const Point2 c = origin + polar(ratio * ab, rot + side * theta);
            // theta re-measured from the placed points, which carry rounding
            const auto inst = Lemma1Instance::from_points(origin, b, c);
            try {
                inst.validate();
            } catch (const PreconditionError &) {
                a.counters["rejected_samples"] += 1.0;
                continue;
            }
            const auto res = check_lemma1(inst, tolerance);
            a.observe(res.residual, !res.holds, {{"theta", theta}, {"ac_over_ab", ratio}, {"ab", ab}});
            break;
        }
    });
    auto r = detail::to_report("lemma1", acc);
    r.values.try_emplace("rejected_samples", 0.0);
    return r;
}

/// Random segment-bound instances: lambda in (1.05, 6), theta with
/// cos(theta) > 1/lambda, d at s in [0, 1]; every eighth sample puts d at c.
inline OracleReport fuzz_lemma2(std::uint64_t seed, std::uint64_t n, double tolerance = kInequalityTolerance) {
    using detail::uniform;
    const double pi = std::numbers::pi;
    auto acc = detail::run_campaign(seed, n, [&](std::mt19937_64 &rng, detail::Accumulator &a) {
        // placements whose rounding breaks the stated preconditions are redrawn
        for (;;) {
            const double lambda = uniform(rng, 1.05, 6.0);
            double theta = 0.0;
            while (theta == 0.0 || !(std::cos(theta) > 1.0 / lambda)) theta = uniform(rng, 0.0, std::acos(1.0 / lambda));
            const bool endpoint = uniform(rng, 0.0, 1.0) < 0.125;
            const double s = endpoint ? 1.0 : uniform(rng, 0.0, 1.0);
            const double ab = uniform(rng, 0.1, 10.0);
            const Point2 origin{uniform(rng, -100.0, 100.0), uniform(rng, -100.0, 100.0)};
            const double rot = uniform(rng, 0.0, 2.0 * pi);
            const auto inst = Lemma2Instance::make(lambda, theta, s, ab, origin, rot);
            try {
                inst.validate();
            } catch (const PreconditionError &) {
                a.counters["rejected_samples"] += 1.0;
                continue;
            }
            const auto res = check_lemma2(inst, tolerance);
            a.observe(res.residual, !res.holds, {{"lambda", lambda}, {"theta", theta}, {"s", s}, {"ab", ab}});
            if (res.at_endpoint) {
                a.counters["endpoint_samples"] += 1.0;
                auto [it, fresh] = a.counters.try_emplace("max.endpoint_equality_residual", std::abs(res.residual));
                if (!fresh) it->second = std::max(it->second, std::abs(res.residual));
            }
            break;
        }
    });
    auto r = detail::to_report("lemma2", acc);
    r.values.try_emplace("endpoint_samples", 0.0);
    r.values.try_emplace("max.endpoint_equality_residual", 0.0);
    r.values.try_emplace("rejected_samples", 0.0);
    return r;
}

/// |t - lambda| on `points` evenly spaced thetas in [0.001, pi/3 - 0.001].
inline OracleReport lemma1_identity_grid(std::uint64_t points, double tolerance = kInequalityTolerance) {
    OracleReport r{.name = "lemma1_identity", .resolution = points};
    const double lo = 0.001;
    const double hi = std::numbers::pi / 3.0 - 0.001;
    for (std::uint64_t i = 0; i < points; ++i) {
        const double theta = points == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
        const double res = check_lemma1_identity(theta);
        ++r.samples;
        if (!(res <= tolerance)) ++r.violations;
        if (res > r.max_residual) {
            r.max_residual = res;
            r.argmax_config = {{"theta", theta}};
        }
    }
    return r;
}

/// lemma2_monotonicity_drop on `instances` random (lambda, theta) pairs;
/// a drop above `tolerance` counts as a violation.
inline OracleReport lemma2_monotonicity_campaign(std::uint64_t seed, std::uint64_t instances,
                                                 double tolerance = kInequalityTolerance, std::size_t steps = 200) {
    using detail::uniform;
    auto acc = detail::run_campaign(seed, instances, [&](std::mt19937_64 &rng, detail::Accumulator &a) {
        const double lambda = uniform(rng, 1.05, 6.0);
        const double theta = uniform(rng, 0.01, 0.99) * std::acos(1.0 / lambda);
        const double drop = lemma2_monotonicity_drop(lambda, theta, steps);
        a.observe(drop, drop > tolerance, {{"lambda", lambda}, {"theta", theta}});
    });
    auto r = detail::to_report("lemma2_monotonicity", acc);
    r.resolution = steps;
    return r;
}

// ---------------------------------------------------------------------------
// |wz| bound. u = (0,0), v = (1,0); w lies on the ray from u at angle alpha,
// z on the ray from v at angle pi - beta, both above uv.

struct Prop1Scenario {
    double alpha = 0.0;
    double beta = 0.0;
    /// Unclamped (2 rho^2 cos a - 2 rho) / (rho^2 - 1); may be negative.
    double w_prime_len = 0.0;
    double w_dprime_len = 1.0;
    double z_prime_len = 0.0;
    double z_dprime_len = 1.0;
    Point2 w_prime, w_dprime, z_prime, z_dprime;
    /// Distances from u and v to the crossing t of rays uw and vz.
    double ut_len = 0.0;
    double vt_len = 0.0;
    double x1 = 0.0, x2 = 0.0, y1 = 0.0, y2 = 0.0;

    static double segment_start(double angle) {
        const double rho = constants().rho;
        return (2.0 * rho * rho * std::cos(angle) - 2.0 * rho) / (rho * rho - 1.0);
    }

    /// Segment starts are clamped to the ray apex when the formula is negative.
    static Prop1Scenario at(double alpha, double beta) {
        Prop1Scenario s;
        s.alpha = alpha;
        s.beta = beta;
        s.w_prime_len = segment_start(alpha);
        s.z_prime_len = segment_start(beta);
        const Point2 u{0.0, 0.0};
        const Point2 v{1.0, 0.0};
        const double w_dir = alpha;
        const double z_dir = std::numbers::pi - beta;
        s.w_prime = u + polar(std::max(0.0, s.w_prime_len), w_dir);
        s.w_dprime = u + polar(s.w_dprime_len, w_dir);
        s.z_prime = v + polar(std::max(0.0, s.z_prime_len), z_dir);
        s.z_dprime = v + polar(s.z_dprime_len, z_dir);
        s.ut_len = std::sin(beta) / std::sin(alpha + beta);
        s.vt_len = std::sin(alpha) / std::sin(alpha + beta);
        s.x1 = s.ut_len - s.w_prime_len;
        s.x2 = s.w_dprime_len - s.ut_len;
        s.y1 = s.vt_len - s.z_prime_len;
        s.y2 = s.z_dprime_len - s.vt_len;
        return s;
    }

    struct EndpointMax {
        double length;
        const char *pair;
    };

    /// Largest of |w'z'|, |w'z''|, |w''z'|, |w''z''|.
    [[nodiscard]] EndpointMax endpoint_max() const {
        const std::pair<double, const char *> candidates[] = {
                {distance(w_prime, z_prime), "w'z'"},
                {distance(w_prime, z_dprime), "w'z''"},
                {distance(w_dprime, z_prime), "w''z'"},
                {distance(w_dprime, z_dprime), "w''z''"},
        };
        EndpointMax best{-1.0, ""};
        for (const auto &[len, name] : candidates)
            if (len > best.length) best = {len, name};
        return best;
    }
};

struct Prop1SweepResult {
    double max_wz = -1.0;
    double alpha = 0.0;
    double beta = 0.0;
    std::string pair;
    std::uint64_t resolution = 0;
    std::uint64_t cells = 0;
    /// Grid spacing in alpha and beta.
    double step = 0.0;
};

/// Maximizes the endpoint distance over a resolution x resolution grid on
/// alpha, beta in [theta_bar, 3pi/5 - theta_bar] with alpha + beta <= 3pi/5.
/// theta_bar itself is included as the closure of the open range.
inline Prop1SweepResult sweep_prop1(std::uint64_t resolution) {
    if (resolution < 2) throw std::invalid_argument("sweep resolution must be at least 2");
    const double lo = constants().theta_bar;
    const double cap = 3.0 * std::numbers::pi / 5.0;
    const double hi = cap - lo;
    const double step = (hi - lo) / static_cast<double>(resolution - 1);

    std::vector<Prop1SweepResult> rows(resolution);
    parallel_for(resolution, [&](std::size_t i) {
        auto &row = rows[i];
        const double alpha = lo + step * static_cast<double>(i);
        for (std::uint64_t j = 0; j < resolution; ++j) {
            const double beta = lo + step * static_cast<double>(j);
            if (alpha + beta > cap + 1e-12) break;
            ++row.cells;
            const auto m = Prop1Scenario::at(alpha, beta).endpoint_max();
            if (m.length > row.max_wz) {
                row.max_wz = m.length;
                row.alpha = alpha;
                row.beta = beta;
                row.pair = m.pair;
            }
        }
    });

    Prop1SweepResult out;
    out.resolution = resolution;
    out.step = step;
    for (const auto &row : rows) {
        out.cells += row.cells;
        if (row.max_wz > out.max_wz) {
            out.max_wz = row.max_wz;
            out.alpha = row.alpha;
            out.beta = row.beta;
            out.pair = row.pair;
        }
    }
    return out;
}

inline OracleReport to_report(const Prop1SweepResult &s, double tolerance = kInequalityTolerance) {
    OracleReport r{.name = "prop1", .samples = s.cells, .resolution = s.resolution};
    r.max_residual = s.max_wz - constants().prop1_bound;
    r.violations = r.max_residual > tolerance ? 1 : 0;
    r.argmax_config = {{"alpha", s.alpha}, {"beta", s.beta}};
    r.values = {{"max_wz", s.max_wz}, {"bound", constants().prop1_bound}, {"grid_step", s.step}};
    return r;
}

// ---------------------------------------------------------------------------
// Induction step: min(g1, g2, g3) <= rho |uv| for w in F_1^u(v), z in F_3^v(u).

/// Points of cone `cone` around `apex` within `radius`.
struct Fan {
    Point2 apex;
    int cone = 1;
    double radius = 0.0;
    ConeSystem cones{5};

    Fan(Point2 apex_, int cone_, double radius_, ConeSystem cones_ = ConeSystem(5))
        : apex(apex_), cone(cone_), radius(radius_), cones(cones_) {
        if (!(radius > 0.0)) throw std::invalid_argument("fan radius must be positive");
        if (cone < 1 || cone > cones.k()) throw std::invalid_argument("fan cone index out of range");
    }
};

/// The apex itself counts as inside.
inline bool fan_contains(const Fan &f, Point2 p) {
    if (p == f.apex) return true;
    return distance(f.apex, p) <= f.radius && cone_index(f.apex, p, f.cones) == f.cone;
}

/// Uniform sample from a fan's area.
inline Point2 sample_fan(const Fan &f, std::mt19937_64 &rng) {
    const double r = f.radius * std::sqrt(detail::uniform(rng, 0.0, 1.0));
    const double start = f.cones.offset() + (f.cone - 1) * f.cones.width();
    const double angle = detail::uniform(rng, start, start + f.cones.width());
    return f.apex + polar(r, angle);
}

struct InductionScenario {
    Point2 u, v, w, z;
    double alpha = 0.0;
    double beta = 0.0;
    double g1 = 0.0, g2 = 0.0, g3 = 0.0;

    /// alpha = |vuw| and beta = |zvu|; taken as 0 when w = u or z = v.
    static InductionScenario make(Point2 u, Point2 v, Point2 w, Point2 z) {
        const double rho = constants().rho;
        InductionScenario s{u, v, w, z};
        s.alpha = w == u ? 0.0 : angle_magnitude(v, u, w);
        s.beta = z == v ? 0.0 : angle_magnitude(z, v, u);
        s.g1 = distance(u, w) + rho * distance(v, w);
        s.g2 = distance(v, z) + rho * distance(u, z);
        s.g3 = distance(u, w) + distance(v, z) + rho * distance(z, w);
        return s;
    }

    [[nodiscard]] double min_g() const { return std::min({g1, g2, g3}); }
    /// min(g1, g2, g3) - rho |uv|; positive means the goal fails.
    [[nodiscard]] double slack() const { return min_g() - constants().rho * distance(u, v); }
};

/// Samples u = (0,0), v on the unit circle at angle [0, pi/5) (cone 1 of u,
/// on or below its bisector), w uniform in F_1^u(v) and z uniform in
/// F_3^v(u). Also tracks the two sub-claims: alpha <= theta_bar forces
/// g1 <= rho, and g1, g2 > rho forces |wz| <= prop1_bound and g3 <= rho.
/// Violations count failures of all three.
inline OracleReport verify_induction_goal(std::uint64_t seed, std::uint64_t n,
                                          double tolerance = kInequalityTolerance) {
    const auto &k = constants();
    auto acc = detail::run_campaign(seed, n, [&](std::mt19937_64 &rng, detail::Accumulator &a) {
        const Point2 u{0.0, 0.0};
        const double psi = detail::uniform(rng, 0.0, std::numbers::pi / 5.0);
        const Point2 v = polar(1.0, psi);
        const Point2 w = sample_fan(Fan(u, 1, 1.0), rng);
        const Point2 z = sample_fan(Fan(v, 3, 1.0), rng);
        const auto s = InductionScenario::make(u, v, w, z);
        const double rho_uv = k.rho * distance(u, v);

        bool failed = s.slack() > tolerance;
        if (s.alpha <= k.theta_bar) {
            a.counters["lemma1_branch_samples"] += 1.0;
            if (s.g1 > rho_uv + tolerance) {
                a.counters["lemma1_branch_failures"] += 1.0;
                failed = true;
            }
        }
        if (s.g1 > rho_uv && s.g2 > rho_uv) {
            a.counters["closure_samples"] += 1.0;
            const double wz = distance(w, z);
            auto [it, fresh] = a.counters.try_emplace("max.closure_wz", wz);
            if (!fresh) it->second = std::max(it->second, wz);
            if (wz > k.prop1_bound + tolerance) {
                a.counters["closure_wz_failures"] += 1.0;
                failed = true;
            }
            if (s.g3 > rho_uv + tolerance) {
                a.counters["closure_g3_failures"] += 1.0;
                failed = true;
            }
        }
        a.observe(s.slack(), failed,
                  {{"v_angle", psi}, {"w_x", w.x}, {"w_y", w.y}, {"z_x", z.x}, {"z_y", z.y}, {"alpha", s.alpha}, {"beta", s.beta}});
    });
    auto r = detail::to_report("induction", acc);
    for (const char *key : {"lemma1_branch_samples", "lemma1_branch_failures", "closure_samples", "closure_wz_failures",
                            "closure_g3_failures", "max.closure_wz"})
        r.values.try_emplace(key, 0.0);
    return r;
}

}// namespace yao::proof
