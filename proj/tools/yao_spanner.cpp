// yao-spanner: build Yao / Yao-Yao graphs, measure stretch, run the numeric
// inequality oracles, generate the reference constructions and render SVG figures.
//
// Exit codes: 0 ok, 1 verification failure, 2 disconnected graph or failed
// spanner query, 64 usage error, 65 malformed input data, 74 I/O failure.

#include "yao/yao.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using yao::io::json;

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kNotSpanner = 2,
    kUsage = 64,
    kDataError = 65,
    kIoError = 74,
};

struct GraphSource {
    std::string graph_path;
    std::string input_path;
    int k = 5;
    std::string variant = "yao";
    double offset = 0.0;

    void add_to(CLI::App &cmd) {
        auto *g = cmd.add_option("--graph", graph_path, "Graph JSON written by `build`");
        auto *i = cmd.add_option("--input", input_path, "Point file (JSON [[x,y],...] or CSV x,y[,label])");
        g->excludes(i);
        cmd.add_option("--k", k, "Number of cones (with --input)")->check(CLI::Range(2, 1 << 20));
        cmd.add_option("--variant", variant, "yao or yaoyao (with --input)")->check(CLI::IsMember({"yao", "yaoyao"}));
        cmd.add_option("--offset", offset, "Cone rotation offset in radians (with --input)");
    }

    [[nodiscard]] yao::DirectedGeomGraph load() const {
        if (!graph_path.empty()) return yao::io::load_graph(graph_path);
        if (input_path.empty()) throw CLI::ValidationError("one of --graph or --input is required");
        return yao::build(yao::io::load_points(input_path), yao::parse_variant(variant), k, offset);
    }
};

void emit(const std::string &path, const std::string &content) {
    if (path.empty() || path == "-") std::cout << content;
    else yao::io::write_file(path, content);
}

std::string format_ratio(double r) {
    if (r == yao::kInfinity) return "inf";
    std::ostringstream s;
    s << std::setprecision(10) << r;
    return s.str();
}

// ---------------------------------------------------------------------------

struct BuildArgs {
    std::string input;
    std::string output;
    int k = 5;
    std::string variant = "yao";
    double offset = 0.0;
};

int run_build(const BuildArgs &a) {
    const auto ps = yao::io::load_points(a.input);
    const auto g = yao::build(ps, yao::parse_variant(a.variant), a.k, a.offset);
    emit(a.output, yao::io::graph_to_json(g).dump(2) + "\n");
    std::cerr << "built " << a.variant << " graph: " << g.size() << " points, " << g.edges().size() << " directed edges\n";
    return kOk;
}

struct AnalyzeArgs {
    GraphSource source;
    double rho = 2.0 + std::sqrt(3.0);
    double tolerance = yao::kDefaultTolerance;
    std::string output;
    std::string pairs_csv;
    bool directed = false;
};

int run_analyze(const AnalyzeArgs &a) {
    const auto g = a.source.load();
    yao::StretchOptions opts;
    opts.directed = a.directed;
    opts.keep_pair_ratios = !a.pairs_csv.empty();
    const auto verdict = yao::is_spanner(g, a.rho, a.tolerance, opts);
    const auto &r = verdict.report;
    const auto &ps = g.point_set();

    std::cout << "points: " << r.n << ", pairs: " << r.pair_count << ", edges: " << g.undirected_pairs().size() << "\n";
    if (r.connected()) {
        std::cout << "stretch factor: " << format_ratio(r.max_ratio) << " (witness " << ps.name(r.witness.first) << " - "
                  << ps.name(r.witness.second) << ")\n";
        std::cout << "witness path:";
        for (std::size_t i = 0; i < r.witness_path.size(); ++i) std::cout << (i ? " -> " : " ") << ps.name(r.witness_path[i]);
        std::cout << "\n";
    } else {
        std::cout << "stretch factor: inf (unreachable pair " << ps.name(r.witness.first) << " - " << ps.name(r.witness.second)
                  << ")\n";
    }
    std::cout << "spanner under rho=" << std::setprecision(8) << a.rho << ": " << (verdict.is_spanner ? "yes" : "no") << "\n";

    if (!a.output.empty()) {
        auto j = yao::io::stretch_report_to_json(r, &ps);
        j["rho"] = a.rho;
        j["tolerance"] = a.tolerance;
        j["is_spanner"] = verdict.is_spanner;
        j["directed"] = a.directed;
        yao::io::write_file(a.output, j.dump(2) + "\n");
    }
    if (!a.pairs_csv.empty()) yao::io::write_file(a.pairs_csv, yao::io::pair_ratios_to_csv(r));
    return verdict.is_spanner ? kOk : kNotSpanner;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string check = "all";
    std::optional<std::uint64_t> samples;
    std::uint64_t seed = 42;
    std::uint64_t resolution = 1000;
    double tolerance = yao::proof::kInequalityTolerance;
    std::string output;
};

std::vector<yao::proof::OracleReport> run_oracles(const VerifyArgs &a) {
    namespace proof = yao::proof;
    std::vector<proof::OracleReport> reports;
    const bool all = a.check == "all";
    if (all || a.check == "constants") reports.push_back(proof::verify_constants());
    if (all || a.check == "lemma1") {
        reports.push_back(proof::fuzz_lemma1(a.seed, a.samples.value_or(100000), a.tolerance));
        reports.push_back(proof::lemma1_identity_grid(10000, a.tolerance));
    }
    if (all || a.check == "lemma2") {
        reports.push_back(proof::fuzz_lemma2(a.seed, a.samples.value_or(100000), a.tolerance));
        reports.push_back(proof::lemma2_monotonicity_campaign(a.seed, 1000, a.tolerance));
    }
    if (all || a.check == "prop1") reports.push_back(proof::to_report(proof::sweep_prop1(a.resolution), a.tolerance));
    if (all || a.check == "induction")
        reports.push_back(proof::verify_induction_goal(a.seed, a.samples.value_or(1000000), a.tolerance));
    return reports;
}

int run_verify(const VerifyArgs &a) {
    const auto reports = run_oracles(a);
    json out = json::array();
    bool ok = true;
    for (const auto &r : reports) {
        out.push_back(yao::io::oracle_report_to_json(r));
        if (!r.passed()) {
            ok = false;
            std::cerr << r.name << ": " << r.violations << " violation(s); worst configuration:";
            for (const auto &[k, v] : r.argmax_config) std::cerr << ' ' << k << '=' << std::setprecision(17) << v;
            std::cerr << "\n";
        }
    }
    emit(a.output, out.dump(2) + "\n");
    return ok ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
    std::string kind;
    int levels = 1;
    std::size_t n = 100;
    std::string distribution = "uniform";
    std::uint64_t seed = 42;
    std::string output;
    std::string format;
};

int run_generate(const GenerateArgs &a) {
    yao::NamedPointSet set;
    if (a.kind == "lower-bound") set = yao::lower_bound_y5();
    else if (a.kind == "yy5") set = yao::yy5_unbounded_family(a.levels);
    else {
        set.name = "random-" + a.distribution + "-" + std::to_string(a.n) + "-" + std::to_string(a.seed);
        set.points = yao::random_points(a.n, yao::parse_distribution(a.distribution), a.seed);
        set.provenance = yao::Provenance::Generated;
        set.metadata = {{"distribution", a.distribution}, {"n", std::to_string(a.n)}, {"seed", std::to_string(a.seed)}};
    }
    std::string format = a.format;
    if (format.empty()) format = a.output.ends_with(".csv") ? "csv" : "json";
    if (format == "csv") emit(a.output, yao::io::points_to_csv(set.points));
    else emit(a.output, yao::io::named_point_set_to_json(set).dump(2) + "\n");
    return kOk;
}

struct RenderArgs {
    GraphSource source;
    std::string output;
    bool cones = false;
    bool witness = false;
    bool no_labels = false;
};

int run_render(const RenderArgs &a) {
    const auto g = a.source.load();
    yao::SvgOptions opts;
    opts.cones = a.cones;
    opts.labels = !a.no_labels;
    if (a.witness && g.size() >= 2) opts.witness_path = yao::stretch_factor(g).witness_path;
    emit(a.output, yao::render_svg(g, opts));
    return kOk;
}

// ---------------------------------------------------------------------------

struct ReproduceArgs {
    std::uint64_t seed = 42;
    std::uint64_t lemma_samples = 100000;
    std::uint64_t induction_samples = 1000000;
    std::uint64_t resolution = 1000;
    int levels = 5;
    std::string output;
};

int run_reproduce(const ReproduceArgs &a) {
    namespace proof = yao::proof;
    json claims = json::array();
    bool ok = true;
    auto claim = [&](const std::string &name, bool passed, json detail) {
        ok = ok && passed;
        std::cout << (passed ? "PASS " : "FAIL ") << name << "\n";
        claims.push_back({{"claim", name}, {"passed", passed}, {"detail", std::move(detail)}});
    };
    const auto &k = proof::constants();

    auto constants = proof::verify_constants();
    claim("rho = 1/(1 - cos theta_bar) = 1/(1 - 2 sin(theta_bar/2))", constants.passed(),
          yao::io::oracle_report_to_json(constants));

    for (auto r : {proof::fuzz_lemma1(a.seed, a.lemma_samples), proof::lemma1_identity_grid(10000),
                   proof::fuzz_lemma2(a.seed, a.lemma_samples), proof::lemma2_monotonicity_campaign(a.seed, 1000)})
        claim(r.name + " holds on every sample", r.passed(), yao::io::oracle_report_to_json(r));

    const auto sweep = proof::sweep_prop1(a.resolution);
    const bool near_extremal =
            std::abs(sweep.alpha - k.theta_bar) <= sweep.step && std::abs(sweep.beta - k.theta_bar) <= sweep.step;
    claim("|wz| <= 2 cos(theta_bar) - 1, maximized at alpha = beta = theta_bar",
          proof::to_report(sweep).passed() && near_extremal, yao::io::oracle_report_to_json(proof::to_report(sweep)));

    const auto induction = proof::verify_induction_goal(a.seed, a.induction_samples);
    claim("min(g1, g2, g3) <= rho |uv|", induction.passed(), yao::io::oracle_report_to_json(induction));

    const auto lb = yao::lower_bound_y5();
    const auto lb_report = yao::stretch_factor(yao::build_yao(lb.points, 5));
    claim("Y5 stretch on the 34-point set lies in (2.87, 2 + sqrt 3]",
          lb_report.max_ratio > 2.87 && lb_report.max_ratio <= k.rho + yao::kDefaultTolerance,
          yao::io::stretch_report_to_json(lb_report, &lb.points));

    json growth = json::array();
    bool increasing = true;
    double prev = 0.0, first = 0.0;
    for (int level = 1; level <= a.levels; ++level) {
        const auto fam = yao::yy5_unbounded_family(level);
        const double r = yao::stretch_factor(yao::build_yao_yao(fam.points, 5)).max_ratio;
        growth.push_back({{"levels", level}, {"stretch", yao::io::real_or_inf(r)}});
        if (level == 1) first = r;
        else increasing = increasing && r > prev;
        prev = r;
    }
    claim("YY5 corridor stretch grows with every level and exceeds rho at level 1",
          increasing && first > k.rho, json{{"levels", growth}});

    json out{{"claims", claims}, {"passed", ok}, {"seed", a.seed}};
    if (!a.output.empty()) yao::io::write_file(a.output, out.dump(2) + "\n");
    return ok ? kOk : kVerificationFailed;
}

}// namespace

int main(int argc, char **argv) {
    CLI::App app{"Yao and Yao-Yao graph spanner toolkit"};
    app.require_subcommand(1);
    std::function<int()> action;

    BuildArgs build;
    auto *cmd_build = app.add_subcommand("build", "Build a Yao or Yao-Yao graph from a point file");
    cmd_build->add_option("--input", build.input, "Point file")->required();
    cmd_build->add_option("--output,-o", build.output, "Graph JSON (default: stdout)");
    cmd_build->add_option("--k", build.k, "Number of cones")->check(CLI::Range(2, 1 << 20));
    cmd_build->add_option("--variant", build.variant, "yao or yaoyao")->check(CLI::IsMember({"yao", "yaoyao"}));
    cmd_build->add_option("--offset", build.offset, "Cone rotation offset in radians");
    cmd_build->callback([&] { action = [&] { return run_build(build); }; });

    AnalyzeArgs analyze;
    auto *cmd_analyze = app.add_subcommand("analyze", "Stretch factor and spanner verdict");
    analyze.source.add_to(*cmd_analyze);
    cmd_analyze->add_option("--rho", analyze.rho, "Spanner threshold");
    cmd_analyze->add_option("--tolerance", analyze.tolerance, "Slack allowed above rho");
    cmd_analyze->add_option("--output,-o", analyze.output, "Write the report as JSON");
    cmd_analyze->add_option("--pairs-csv", analyze.pairs_csv, "Write every pair's ratio as CSV");
    cmd_analyze->add_flag("--directed", analyze.directed, "Follow edge directions (exploratory)");
    cmd_analyze->callback([&] { action = [&] { return run_analyze(analyze); }; });

    VerifyArgs verify;
    auto *cmd_verify = app.add_subcommand("verify", "Run the numeric proof oracles");
    cmd_verify->add_option("check", verify.check, "constants | lemma1 | lemma2 | prop1 | induction | all")
            ->check(CLI::IsMember({"constants", "lemma1", "lemma2", "prop1", "induction", "all"}));
    cmd_verify->add_option("--samples", verify.samples, "Fuzz samples (lemma default 1e5, induction 1e6)");
    cmd_verify->add_option("--seed", verify.seed, "Random seed");
    cmd_verify->add_option("--resolution", verify.resolution, "Grid resolution per axis")->check(CLI::Range(2, 100000));
    cmd_verify->add_option("--tolerance", verify.tolerance, "Inequality tolerance");
    cmd_verify->add_option("--output,-o", verify.output, "Write the JSON reports here instead of stdout");
    cmd_verify->callback([&] { action = [&] { return run_verify(verify); }; });

    GenerateArgs generate;
    auto *cmd_generate = app.add_subcommand("generate", "Write a reference or random point set");
    cmd_generate->add_option("kind", generate.kind, "lower-bound | yy5 | random")
            ->required()
            ->check(CLI::IsMember({"lower-bound", "yy5", "random"}));
    cmd_generate->add_option("--levels", generate.levels, "Corridor levels for yy5")->check(CLI::Range(1, 1000));
    cmd_generate->add_option("--n", generate.n, "Point count for random");
    cmd_generate->add_option("--distribution", generate.distribution, "uniform | clustered | annulus | grid-jitter")
            ->check(CLI::IsMember({"uniform", "clustered", "annulus", "grid-jitter"}));
    cmd_generate->add_option("--seed", generate.seed, "Random seed");
    cmd_generate->add_option("--output,-o", generate.output, "Output file (default: stdout)");
    cmd_generate->add_option("--format", generate.format, "json or csv (default: from extension)")
            ->check(CLI::IsMember({"json", "csv"}));
    cmd_generate->callback([&] { action = [&] { return run_generate(generate); }; });

    RenderArgs render;
    auto *cmd_render = app.add_subcommand("render", "Draw a graph as SVG");
    render.source.add_to(*cmd_render);
    cmd_render->add_option("--output,-o", render.output, "SVG file (default: stdout)");
    cmd_render->add_flag("--cones", render.cones, "Draw cone boundaries around every point");
    cmd_render->add_flag("--witness", render.witness, "Highlight the stretch witness path");
    cmd_render->add_flag("--no-labels", render.no_labels, "Omit point labels");
    cmd_render->callback([&] { action = [&] { return run_render(render); }; });

    ReproduceArgs reproduce;
    auto *cmd_reproduce = app.add_subcommand("reproduce", "Check every claim end to end");
    cmd_reproduce->add_option("--seed", reproduce.seed, "Random seed");
    cmd_reproduce->add_option("--lemma-samples", reproduce.lemma_samples, "Samples per lemma campaign");
    cmd_reproduce->add_option("--induction-samples", reproduce.induction_samples, "Induction scenarios");
    cmd_reproduce->add_option("--resolution", reproduce.resolution, "Sweep resolution")->check(CLI::Range(2, 100000));
    cmd_reproduce->add_option("--levels", reproduce.levels, "Corridor levels")->check(CLI::Range(2, 1000));
    cmd_reproduce->add_option("--output,-o", reproduce.output, "Consolidated JSON report");
    cmd_reproduce->callback([&] { action = [&] { return run_reproduce(reproduce); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        return action();
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const yao::DuplicatePointError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const yao::io::InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        const std::string msg = e.what();
        return msg.starts_with("cannot open") || msg.starts_with("failed writing") ? kIoError : kDataError;
    } catch (const yao::ConstructionError &e) {
        std::cerr << "error: construction self-check failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    }
}
