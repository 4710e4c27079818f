#include "coverreg/verify.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coverreg {

namespace {

// Generator-level difference between two ideals, for witnesses.
std::string diff_ideals(const MonomialIdeal& left, const MonomialIdeal& right) {
    std::ostringstream out;
    auto list_missing = [&](const MonomialIdeal& from, const MonomialIdeal& in,
                            const char* label) {
        std::vector<std::string> missing;
        for (const Monomial& g : from.generators()) {
            bool found = std::any_of(in.generators().begin(), in.generators().end(),
                                     [&](const Monomial& h) { return h == g; });
            if (!found) missing.push_back(g.str());
        }
        if (missing.empty()) return;
        out << label;
        for (std::size_t t = 0; t < missing.size(); ++t)
            out << (t ? ", " : " ") << missing[t];
        out << "; ";
    };
    list_missing(left, right, "only left:");
    list_missing(right, left, "only right:");
    std::string text = out.str();
    if (text.size() >= 2) text.resize(text.size() - 2);
    return text;
}

Monomial product_of(const VertexSet& vars, int nvars) {
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    for (int v : vars.members()) exps[static_cast<std::size_t>(v)] = 1;
    return Monomial(std::move(exps));
}

}  // namespace

Graph reduce_isolated(const Graph& g) { return g.delete_vertices(g.isolated_vertices()); }

IdentityReport check_degree_lemma(const MonomialIdeal& i, int k, const std::string& id) {
    if (i.is_zero()) throw std::invalid_argument("check_degree_lemma: nonzero ideal required");
    if (!i.is_squarefree())
        throw std::invalid_argument("check_degree_lemma: squarefree ideal required");
    if (k < 1) throw std::invalid_argument("check_degree_lemma: k >= 1 required");
    IdentityReport report{"degree_lemma", id, "k=" + std::to_string(k), true, ""};
    MonomialIdeal symbolic = symbolic_power(i, k);
    if (symbolic.degree() < k * i.degree()) {
        report.pass = false;
        report.witness = "deg(I^(" + std::to_string(k) + ")) = " +
                         std::to_string(symbolic.degree()) + " < " +
                         std::to_string(k * i.degree()) + " = k*deg(I)";
        return report;
    }
    for (const Monomial& u : i.generators()) {
        Monomial uk = u.pow(k);
        bool is_generator =
            std::any_of(symbolic.generators().begin(), symbolic.generators().end(),
                        [&](const Monomial& h) { return h == uk; });
        if (!is_generator) {
            report.pass = false;
            report.witness = uk.str() + " is not a minimal generator of I^(" +
                             std::to_string(k) + ")";
            return report;
        }
    }
    return report;
}

BoundsReport check_bounds(const Graph& g, int k, const FieldTag& f) {
    if (k < 1) throw std::invalid_argument("check_bounds: k >= 1 required");
    Graph reduced = reduce_isolated(g);
    if (reduced.m() == 0) throw std::invalid_argument("check_bounds: at least one edge required");
    BoundsReport report;
    report.graph_id = g.id();
    report.n = reduced.n();
    report.k = k;
    report.bipartite = reduced.is_bipartite().has_value();
    report.unmixed = reduced.is_unmixed();
    report.claw_free = reduced.is_claw_free();
    report.field = f;
    MonomialIdeal j = cover_ideal(reduced);
    report.deg = j.degree();
    report.reg = regularity(symbolic_power(j, k), f);
    report.lower = k * report.deg;
    report.upper = (k - 1) * report.deg + report.n - 1;
    report.holds = report.lower <= report.reg && report.reg <= report.upper;
    report.lower_tight = report.reg == report.lower;
    report.upper_tight = report.reg == report.upper;
    return report;
}

IdentityReport check_restriction_identity(const Graph& g, int v) {
    if (v < 0 || v >= g.n())
        throw std::invalid_argument("check_restriction_identity: vertex out of range");
    IdentityReport report{"restriction", g.id(), "v=" + std::to_string(v + 1), true, ""};
    MonomialIdeal left = restrict_away(cover_ideal(g), v);

    VertexSet closed = g.closed_neighborhood(v);
    MonomialIdeal j_sub = cover_ideal(g.delete_vertices(closed));
    // Positions of V \ N[v] within the subring on V \ {v}.
    std::vector<int> positions;
    int pos = 0;
    for (int w = 0; w < g.n(); ++w) {
        if (w == v) continue;
        if (!closed.contains(w)) positions.push_back(pos);
        ++pos;
    }
    MonomialIdeal embedded = embed(j_sub, positions, g.n() - 1);
    std::vector<int> u_exps(static_cast<std::size_t>(g.n() - 1), 0);
    pos = 0;
    for (int w = 0; w < g.n(); ++w) {
        if (w == v) continue;
        if (g.neighbors(v).contains(w)) u_exps[static_cast<std::size_t>(pos)] = 1;
        ++pos;
    }
    MonomialIdeal right =
        product(embedded, MonomialIdeal(g.n() - 1, {Monomial(std::move(u_exps))}));
    if (!(left == right)) {
        report.pass = false;
        report.witness = diff_ideals(left, right);
    }
    return report;
}

IdentityReport check_colon_identity(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("check_colon_identity: k >= 2 required");
    Graph reduced = reduce_isolated(g);
    if (reduced.m() == 0)
        throw std::invalid_argument("check_colon_identity: at least one edge required");
    IdentityReport report{"colon", g.id(), "k=" + std::to_string(k), true, ""};
    MonomialIdeal j = cover_ideal(reduced);
    MonomialIdeal left =
        colon(symbolic_power(j, k), product_of(reduced.vertex_set(), reduced.n()));
    MonomialIdeal right = symbolic_power(j, k - 2);
    if (!(left == right)) {
        report.pass = false;
        report.witness = diff_ideals(left, right);
    }
    return report;
}

IdentityReport check_bipartite_power_equality(const Graph& g, int k) {
    if (!g.is_bipartite())
        throw std::invalid_argument("check_bipartite_power_equality: bipartite graph required");
    if (k < 0) throw std::invalid_argument("check_bipartite_power_equality: k >= 0 required");
    IdentityReport report{"bipartite_power", g.id(), "k=" + std::to_string(k), true, ""};
    MonomialIdeal j = cover_ideal(g);
    MonomialIdeal ordinary = power(j, k);
    MonomialIdeal symbolic = symbolic_power(j, k);
    if (!(ordinary == symbolic)) {
        report.pass = false;
        report.witness = diff_ideals(ordinary, symbolic);
    }
    return report;
}

IdentityReport check_half_cover_condition(const Graph& g) {
    if (g.has_isolated_vertex())
        throw std::invalid_argument("check_half_cover_condition: isolated vertices present");
    IdentityReport report{"half_cover", g.id(), "", true, ""};
    std::vector<VertexSet> covers = g.minimal_vertex_covers();
    int largest = covers.empty() ? 0 : covers.back().size();
    if (2 * largest < g.n()) {
        report.pass = false;
        report.witness = "largest minimal cover has " + std::to_string(largest) + " of " +
                         std::to_string(g.n()) + " vertices";
    }
    return report;
}

namespace {

IdentityReport sharpness_report(const std::string& label, const Graph& g,
                                const MonomialIdeal& power_ideal, int k, int expected_deg,
                                const FieldTag& f) {
    IdentityReport report{"sharpness", g.id(), label + ",k=" + std::to_string(k), true, ""};
    MonomialIdeal j = cover_ideal(g);
    int deg = j.degree();
    if (deg != expected_deg) {
        report.pass = false;
        report.witness = "deg(J) = " + std::to_string(deg) + ", expected " +
                         std::to_string(expected_deg);
        return report;
    }
    int lower = k * deg;
    int upper = (k - 1) * deg + g.n() - 1;
    int reg = regularity(power_ideal, f);
    if (lower != upper || reg != lower) {
        report.pass = false;
        report.witness = "reg = " + std::to_string(reg) + ", lower = " + std::to_string(lower) +
                         ", upper = " + std::to_string(upper);
    }
    return report;
}

}  // namespace

IdentityReport check_star_sharpness(int n, int k, const FieldTag& f) {
    if (n < 1 || k < 1) throw std::invalid_argument("check_star_sharpness: n, k >= 1 required");
    Graph g = star(n);
    MonomialIdeal j = cover_ideal(g);
    return sharpness_report("kind=star", g, power(j, k), k, n, f);
}

IdentityReport check_complete_sharpness(int n, int k, const FieldTag& f) {
    if (n < 2 || k < 1)
        throw std::invalid_argument("check_complete_sharpness: n >= 2 and k >= 1 required");
    Graph g = complete(n);
    MonomialIdeal j = cover_ideal(g);
    return sharpness_report("kind=complete", g, symbolic_power(j, k), k, n - 1, f);
}

IdentityReport check_cone_sharpness(const Graph& h, int k, const FieldTag& f) {
    if (k < 1) throw std::invalid_argument("check_cone_sharpness: k >= 1 required");
    if (h.independence_number() > 2)
        throw std::invalid_argument(
            "check_cone_sharpness: base independence number at most 2 required");
    Graph g = cone(h);
    MonomialIdeal j = cover_ideal(g);
    return sharpness_report("kind=cone", g, symbolic_power(j, k), k, h.n(), f);
}

IdentityReport check_bound_comparison(const Graph& g, int k, const FieldTag& f) {
    if (!g.is_bipartite())
        throw std::invalid_argument("check_bound_comparison: bipartite graph required");
    if (k < 1) throw std::invalid_argument("check_bound_comparison: k >= 1 required");
    IdentityReport report{"bound_comparison", g.id(), "k=" + std::to_string(k), true, ""};
    Graph reduced = reduce_isolated(g);
    MonomialIdeal j = cover_ideal(reduced);
    int deg = j.is_unit() ? 0 : j.degree();
    int reg = regularity(j, f);
    int left = (k - 1) * deg + reduced.n() - 1;
    int right = k * deg + reg - 1;
    if (left > right) {
        report.pass = false;
        report.witness = "(k-1)*deg + n - 1 = " + std::to_string(left) + " > " +
                         std::to_string(right) + " = k*deg + reg(J) - 1";
    }
    return report;
}

MonomialIdeal random_squarefree_ideal(int nvars, int max_gens, std::uint64_t seed) {
    if (nvars < 1 || nvars > 30)
        throw std::invalid_argument("random_squarefree_ideal: 1 <= nvars <= 30 required");
    if (max_gens < 1) throw std::invalid_argument("random_squarefree_ideal: max_gens >= 1 required");
    std::uint64_t state = seed;
    int count = 1 + static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(max_gens));
    std::vector<Monomial> gens;
    for (int t = 0; t < count; ++t) {
        std::uint64_t mask = 0;
        while (mask == 0) mask = splitmix64(state) & ((1ull << nvars) - 1);
        std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
        for (int v = 0; v < nvars; ++v)
            if ((mask >> v) & 1u) exps[static_cast<std::size_t>(v)] = 1;
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(nvars, std::move(gens));
}

std::vector<Graph> FamilySpec::materialize() const {
    std::vector<Graph> out;
    switch (kind) {
        case Kind::all:
        case Kind::connected:
            for (int n = std::max(1, n_min); n <= n_max; ++n)
                for (Graph& g : enumerate_graphs(n, kind == Kind::connected))
                    out.push_back(std::move(g));
            break;
        case Kind::star:
            for (int n = n_min; n <= n_max; ++n) out.push_back(star(n));
            break;
        case Kind::complete:
            for (int n = n_min; n <= n_max; ++n) out.push_back(complete(n));
            break;
        case Kind::path:
            for (int n = n_min; n <= n_max; ++n) out.push_back(coverreg::path(n));
            break;
        case Kind::cycle:
            for (int n = n_min; n <= n_max; ++n) out.push_back(cycle(n));
            break;
        case Kind::complete_bipartite:
            for (int a = a_min; a <= a_max; ++a)
                for (int b = b_min; b <= b_max; ++b) out.push_back(complete_bipartite(a, b));
            break;
        case Kind::pendant_blowup:
            for (int n = n_min; n <= n_max; ++n)
                for (int s = s_min; s <= s_max; ++s) out.push_back(pendant_blowup(n, s));
            break;
        case Kind::cone_cycle:
            for (int n = n_min; n <= n_max; ++n) out.push_back(cone(cycle(n)));
            break;
        case Kind::random: {
            std::uint64_t next_seed = seed;
            for (int n = n_min; n <= n_max; ++n)
                for (int t = 0; t < count; ++t) out.push_back(random_graph(n, p, next_seed++));
            break;
        }
        case Kind::file: {
            std::ifstream in(path);
            if (!in) throw std::runtime_error("cannot open graph file: " + path);
            out.push_back(parse_edge_list(in, path));
            break;
        }
    }
    return out;
}

namespace {

bool wants(const SweepOptions& options, Check c) {
    return options.checks.empty() ||
           std::find(options.checks.begin(), options.checks.end(), c) != options.checks.end();
}

}  // namespace

SweepResult sweep(const SweepOptions& options) {
    SweepResult result;
    FamilySpec::Kind kind = options.family.kind;
    bool sharpness_family = kind == FamilySpec::Kind::star ||
                            kind == FamilySpec::Kind::complete ||
                            kind == FamilySpec::Kind::cone_cycle;
    if (!options.checks.empty() && wants(options, Check::sharpness) && !sharpness_family)
        throw std::runtime_error("sharpness checks require a star, complete, or cone-cycle family");
    std::vector<Graph> graphs = options.family.materialize();
    for (const Graph& g : graphs) {
        Graph reduced = reduce_isolated(g);
        bool has_edge = reduced.m() > 0;
        bool bipartite = g.is_bipartite().has_value();
        bool in_class = bipartite || reduced.is_unmixed() || reduced.is_claw_free();
        auto guard = [&](const std::string& what, auto&& body) {
            try {
                body();
            } catch (const std::exception& e) {
                result.errors.push_back(g.id() + " " + what + ": " + e.what());
            }
        };
        if (wants(options, Check::restriction))
            for (int v = 0; v < g.n(); ++v)
                guard("restriction v=" + std::to_string(v + 1), [&] {
                    IdentityReport r = check_restriction_identity(g, v);
                    if (!r.pass) ++result.violations;
                    result.identities.push_back(std::move(r));
                });
        if (wants(options, Check::half_cover) && !g.has_isolated_vertex() && g.n() > 0)
            guard("half_cover", [&] {
                IdentityReport r = check_half_cover_condition(g);
                if (!r.pass) ++(in_class ? result.violations : result.observations);
                result.identities.push_back(std::move(r));
            });
        for (int k = 1; k <= options.k_max; ++k) {
            if (wants(options, Check::bounds) && has_edge)
                guard("bounds k=" + std::to_string(k), [&] {
                    BoundsReport r = check_bounds(g, k, options.field);
                    if (!r.holds) ++(r.in_class() ? result.violations : result.observations);
                    result.bounds.push_back(std::move(r));
                });
            if (wants(options, Check::degree_lemma) && has_edge)
                guard("degree_lemma k=" + std::to_string(k), [&] {
                    IdentityReport r = check_degree_lemma(cover_ideal(reduced), k, g.id());
                    if (!r.pass) ++result.violations;
                    result.identities.push_back(std::move(r));
                });
            if (wants(options, Check::colon) && has_edge && k >= 2)
                guard("colon k=" + std::to_string(k), [&] {
                    IdentityReport r = check_colon_identity(g, k);
                    if (!r.pass) ++result.violations;
                    result.identities.push_back(std::move(r));
                });
            if (wants(options, Check::bipartite_power) && bipartite)
                guard("bipartite_power k=" + std::to_string(k), [&] {
                    IdentityReport r = check_bipartite_power_equality(g, k);
                    if (!r.pass) ++result.violations;
                    result.identities.push_back(std::move(r));
                });
            if (wants(options, Check::bound_comparison) && bipartite)
                guard("bound_comparison k=" + std::to_string(k), [&] {
                    IdentityReport r = check_bound_comparison(g, k, options.field);
                    if (!r.pass) ++result.violations;
                    result.identities.push_back(std::move(r));
                });
            if (wants(options, Check::sharpness) && sharpness_family)
                guard("sharpness k=" + std::to_string(k), [&] {
                    IdentityReport r;
                    if (kind == FamilySpec::Kind::star)
                        r = check_star_sharpness(g.n() - 1, k, options.field);
                    else if (kind == FamilySpec::Kind::complete)
                        r = check_complete_sharpness(g.n(), k, options.field);
                    else
                        r = check_cone_sharpness(cycle(g.n() - 1), k, options.field);
                    if (!r.pass) ++result.violations;
                    result.identities.push_back(std::move(r));
                });
        }
    }
    return result;
}

}  // namespace coverreg
