#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coverreg/betti.hpp"
#include "coverreg/caps.hpp"
#include "coverreg/cover.hpp"
#include "coverreg/graph.hpp"
#include "coverreg/monomial.hpp"
#include "coverreg/report_io.hpp"
#include "coverreg/verify.hpp"

namespace {

using namespace coverreg;

// Parses "3" or "1..4" into an inclusive range.
std::pair<int, int> parse_range(const std::string& text) {
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty range");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::runtime_error("bad range '" + text + "' (use N or LO..HI)");
    }
}

FamilySpec::Kind parse_family(const std::string& text) {
    if (text == "all") return FamilySpec::Kind::all;
    if (text == "connected") return FamilySpec::Kind::connected;
    if (text == "star") return FamilySpec::Kind::star;
    if (text == "complete") return FamilySpec::Kind::complete;
    if (text == "path") return FamilySpec::Kind::path;
    if (text == "cycle") return FamilySpec::Kind::cycle;
    if (text == "complete-bipartite") return FamilySpec::Kind::complete_bipartite;
    if (text == "pendant-blowup") return FamilySpec::Kind::pendant_blowup;
    if (text == "cone-cycle") return FamilySpec::Kind::cone_cycle;
    if (text == "random") return FamilySpec::Kind::random;
    if (text == "file") return FamilySpec::Kind::file;
    throw std::runtime_error("unknown family '" + text + "'");
}

Check parse_check(const std::string& text) {
    if (text == "bounds") return Check::bounds;
    if (text == "degree-lemma") return Check::degree_lemma;
    if (text == "restriction") return Check::restriction;
    if (text == "colon") return Check::colon;
    if (text == "bipartite-power") return Check::bipartite_power;
    if (text == "half-cover") return Check::half_cover;
    if (text == "sharpness") return Check::sharpness;
    if (text == "bound-comparison") return Check::bound_comparison;
    throw std::runtime_error("unknown check '" + text + "'");
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_edge_list(in, path);
}

struct Options {
    std::string graph_path;
    std::string family = "all";
    bool family_given = false;
    std::string n_range, a_range, b_range, s_range;
    int max_n = 5;
    int k = 1;
    int max_k = 1;
    std::string field = "gf2";
    std::string format = "json";
    std::string out_path;
    std::string p_text = "1/2";
    std::uint64_t seed = 0;
    int count = 1;
    std::vector<std::string> checks;
    bool emit_betti = false;
    bool ordinary = false;
};

FamilySpec build_family(const Options& opt) {
    FamilySpec spec;
    if (!opt.family_given && !opt.graph_path.empty()) {
        spec.kind = FamilySpec::Kind::file;
        spec.path = opt.graph_path;
        return spec;
    }
    spec.kind = parse_family(opt.family);
    if (spec.kind == FamilySpec::Kind::file) {
        if (opt.graph_path.empty()) throw std::runtime_error("family 'file' needs --graph");
        spec.path = opt.graph_path;
        return spec;
    }
    if (!opt.n_range.empty()) {
        auto [lo, hi] = parse_range(opt.n_range);
        spec.n_min = lo;
        spec.n_max = hi;
    } else if (spec.kind == FamilySpec::Kind::all || spec.kind == FamilySpec::Kind::connected) {
        spec.n_min = 1;
        spec.n_max = opt.max_n;
    } else {
        throw std::runtime_error("this family needs --n (a value or LO..HI range)");
    }
    if (!opt.a_range.empty()) std::tie(spec.a_min, spec.a_max) = parse_range(opt.a_range);
    if (!opt.b_range.empty()) std::tie(spec.b_min, spec.b_max) = parse_range(opt.b_range);
    if (!opt.s_range.empty()) std::tie(spec.s_min, spec.s_max) = parse_range(opt.s_range);
    if (spec.kind == FamilySpec::Kind::complete_bipartite &&
        (opt.a_range.empty() || opt.b_range.empty()))
        throw std::runtime_error("family 'complete-bipartite' needs --a and --b");
    if (spec.kind == FamilySpec::Kind::pendant_blowup && opt.s_range.empty())
        throw std::runtime_error("family 'pendant-blowup' needs --s");
    spec.p = parse_ratio(opt.p_text);
    spec.seed = opt.seed;
    spec.count = opt.count;
    return spec;
}

Graph resolve_single_graph(const Options& opt) {
    if (!opt.graph_path.empty()) return load_graph(opt.graph_path);
    if (!opt.family_given)
        throw std::runtime_error("need --graph FILE or a --family with single parameters");
    std::vector<Graph> graphs = build_family(opt).materialize();
    if (graphs.size() != 1)
        throw std::runtime_error("family describes " + std::to_string(graphs.size()) +
                                 " graphs; exactly one required here");
    return std::move(graphs.front());
}

int run_ideal(const Options& opt, const std::string& variant) {
    Graph g = resolve_single_graph(opt);
    MonomialIdeal j = cover_ideal(g);
    if (variant == "cover") {
        std::cout << j.to_text();
    } else if (variant == "symbolic") {
        std::cout << symbolic_power(j, opt.k).to_text();
    } else {
        std::cout << power(j, opt.k).to_text();
    }
    return 0;
}

int run_regularity(const Options& opt) {
    Graph g = resolve_single_graph(opt);
    FieldTag field = FieldTag::parse(opt.field);
    MonomialIdeal j = cover_ideal(g);
    MonomialIdeal target = opt.ordinary ? power(j, opt.k) : symbolic_power(j, opt.k);
    if (opt.emit_betti && !target.is_zero() && !target.is_unit())
        std::cout << betti_numbers(target, field).to_text();
    std::cout << regularity(target, field) << '\n';
    return 0;
}

int run_verify(const Options& opt) {
    SweepOptions sweep_options;
    sweep_options.family = build_family(opt);
    sweep_options.k_max = opt.max_k;
    sweep_options.field = FieldTag::parse(opt.field);
    for (const std::string& c : opt.checks) sweep_options.checks.push_back(parse_check(c));
    SweepResult result = sweep(sweep_options);
    std::string report;
    if (opt.format == "json") report = report_json(result);
    else if (opt.format == "csv") report = report_csv(result);
    else if (opt.format == "text") report = report_text(result);
    else throw std::runtime_error("unknown format '" + opt.format + "'");
    if (opt.out_path.empty()) {
        std::cout << report;
    } else {
        std::ofstream out(opt.out_path);
        if (!out) throw std::runtime_error("cannot open output file: " + opt.out_path);
        out << report;
    }
    if (result.violations > 0) return 1;
    if (!result.errors.empty()) {
        for (const std::string& e : result.errors) std::cerr << "error: " << e << '\n';
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cover ideals, symbolic powers, and regularity of graphs"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* ideal = app.add_subcommand("ideal", "print a cover ideal or one of its powers");
    ideal->require_subcommand(1);
    ideal->fallthrough();
    CLI::App* ideal_cover = ideal->add_subcommand("cover", "the cover ideal J(G)");
    CLI::App* ideal_symbolic = ideal->add_subcommand("symbolic", "the symbolic power J(G)^(k)");
    CLI::App* ideal_power = ideal->add_subcommand("power", "the ordinary power J(G)^k");
    for (CLI::App* sub : {ideal_cover, ideal_symbolic, ideal_power}) sub->fallthrough();
    for (CLI::App* sub : {ideal_cover, ideal_symbolic, ideal_power}) {
        sub->add_option("--graph", opt.graph_path, "edge-list file");
        sub->add_option("--family", opt.family, "named family (single graph)")
            ->each([&](const std::string&) { opt.family_given = true; });
        sub->add_option("--n", opt.n_range, "family parameter");
        sub->add_option("--a", opt.a_range, "first part size (complete-bipartite)");
        sub->add_option("--b", opt.b_range, "second part size (complete-bipartite)");
        sub->add_option("--s", opt.s_range, "pendant edges per vertex (pendant-blowup)");
        sub->add_option("--p", opt.p_text, "edge probability a/b (random)");
        sub->add_option("--seed", opt.seed, "random seed");
    }
    for (CLI::App* sub : {ideal_symbolic, ideal_power})
        sub->add_option("-k,--k", opt.k, "exponent")->check(CLI::NonNegativeNumber);

    CLI::App* reg = app.add_subcommand("regularity", "regularity of J(G)^(k) (or J(G)^k)");
    reg->fallthrough();
    reg->add_option("--graph", opt.graph_path, "edge-list file");
    reg->add_option("--family", opt.family, "named family (single graph)")
        ->each([&](const std::string&) { opt.family_given = true; });
    reg->add_option("--n", opt.n_range, "family parameter");
    reg->add_option("--a", opt.a_range, "first part size (complete-bipartite)");
    reg->add_option("--b", opt.b_range, "second part size (complete-bipartite)");
    reg->add_option("--s", opt.s_range, "pendant edges per vertex (pendant-blowup)");
    reg->add_option("--p", opt.p_text, "edge probability a/b (random)");
    reg->add_option("--seed", opt.seed, "random seed");
    reg->add_option("-k,--k", opt.k, "power exponent")->check(CLI::NonNegativeNumber);
    reg->add_flag("--ordinary", opt.ordinary, "use the ordinary power instead of the symbolic one");
    reg->add_flag("--emit-betti", opt.emit_betti, "print the Betti table before the regularity");
    reg->add_option("--field", opt.field, "coefficient field: gf2, rational, or gf<p>");

    CLI::App* verify = app.add_subcommand("verify", "run verification sweeps over a graph family");
    verify->fallthrough();
    verify->add_option("--family", opt.family,
                       "all, connected, star, complete, path, cycle, complete-bipartite, "
                       "pendant-blowup, cone-cycle, random, or file")
        ->each([&](const std::string&) { opt.family_given = true; });
    verify->add_option("--graph", opt.graph_path, "edge-list file (family 'file')");
    verify->add_option("--max-n", opt.max_n, "largest vertex count for all/connected")
        ->check(CLI::PositiveNumber);
    verify->add_option("--n", opt.n_range, "family parameter value or LO..HI range");
    verify->add_option("--a", opt.a_range, "first part size or range (complete-bipartite)");
    verify->add_option("--b", opt.b_range, "second part size or range (complete-bipartite)");
    verify->add_option("--s", opt.s_range, "pendant edges per vertex or range (pendant-blowup)");
    verify->add_option("--max-k", opt.max_k, "largest symbolic-power exponent")
        ->check(CLI::PositiveNumber);
    verify->add_option("--check", opt.checks,
                       "restrict to named checks: bounds, degree-lemma, restriction, colon, "
                       "bipartite-power, half-cover, sharpness, bound-comparison");
    verify->add_option("--field", opt.field, "coefficient field: gf2, rational, or gf<p>");
    verify->add_option("--format", opt.format, "json, csv, or text");
    verify->add_option("--out", opt.out_path, "write the report to this file");
    verify->add_option("--p", opt.p_text, "edge probability a/b (random)");
    verify->add_option("--seed", opt.seed, "base random seed");
    verify->add_option("--count", opt.count, "samples per vertex count (random)")
        ->check(CLI::PositiveNumber);

    std::size_t generator_cap = 0, lattice_cap = 0;
    app.add_option("--generator-cap", generator_cap, "intermediate generator cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--lattice-cap", lattice_cap, "lcm-lattice size cap")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (generator_cap > 0) caps().generator_cap = generator_cap;
    if (lattice_cap > 0) caps().lattice_cap = lattice_cap;

    try {
        if (ideal->parsed()) {
            if (ideal_cover->parsed()) return run_ideal(opt, "cover");
            if (ideal_symbolic->parsed()) return run_ideal(opt, "symbolic");
            return run_ideal(opt, "power");
        }
        if (reg->parsed()) return run_regularity(opt);
        return run_verify(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
