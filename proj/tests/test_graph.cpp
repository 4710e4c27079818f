#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "coverreg/graph.hpp"

using namespace coverreg;

namespace {

std::set<std::uint64_t> cover_masks(const Graph& g) {
    std::set<std::uint64_t> out;
    for (const VertexSet& c : g.minimal_vertex_covers()) out.insert(c.bits());
    return out;
}

// Independent oracle: C covers G iff every edge meets C; C is a minimal
// cover iff additionally no single-vertex deletion still covers.
std::set<std::uint64_t> brute_minimal_covers(const Graph& g) {
    auto covers = [&](std::uint64_t s) {
        for (auto [u, v] : g.edges())
            if (!((s >> u | s >> v) & 1)) return false;
        return true;
    };
    std::set<std::uint64_t> out;
    for (std::uint64_t s = 0; s < (1ull << g.n()); ++s) {
        if (!covers(s)) continue;
        bool minimal = true;
        for (int v = 0; v < g.n() && minimal; ++v)
            if ((s >> v & 1) && covers(s & ~(1ull << v))) minimal = false;
        if (minimal) out.insert(s);
    }
    return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> perm(a.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (auto [u, v] : a.edges())
            if (!b.has_edge(perm[u], perm[v])) {
                match = false;
                break;
            }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("vertex sets") {
    VertexSet s = VertexSet::empty_set(5);
    CHECK(s.empty());
    s.insert(0).insert(2);
    CHECK(s.size() == 2);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(1));
    CHECK(s.members() == std::vector<int>{0, 2});
    CHECK(s.str() == "{x1, x3}");
    CHECK(VertexSet::empty_set(3).str() == "{}");
    CHECK(s.complement().members() == std::vector<int>{1, 3, 4});
    CHECK(VertexSet::full_set(3).size() == 3);
    CHECK(s.is_subset_of(VertexSet::full_set(5)));
    CHECK((s | VertexSet(5, 0b10)).size() == 3);
    CHECK((s & VertexSet(5, 0b1)).members() == std::vector<int>{0});
    CHECK_THROWS_AS(s.insert(5), std::invalid_argument);
    CHECK_THROWS_AS(VertexSet(65, 0), std::invalid_argument);
}

TEST_CASE("construction validates edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);   // loop
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);  // duplicate
    Graph g(3, {{2, 0}, {0, 1}});
    CHECK(g.m() == 2);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("identifiers and labels") {
    CHECK(path(3).id() == "P3");
    CHECK(complete(4).id() == "K4");
    CHECK(cycle(5).id() == "C5");
    CHECK(star(3).id() == "K1,3");
    CHECK(complete_bipartite(2, 3).id() == "K2,3");
    CHECK(pendant_blowup(3, 3).id() == "G3,3");
    CHECK(cone(cycle(5)).id() == "cone(C5)");
    Graph anon(3, {{0, 1}, {0, 2}});
    CHECK(anon.id() == "n3:1-2,1-3");
    CHECK(anon.labels() == std::vector<std::string>{"x1", "x2", "x3"});
}

TEST_CASE("families have the advertised shapes") {
    Graph p4 = path(4);
    CHECK(p4.n() == 4);
    CHECK(p4.m() == 3);
    CHECK(p4.has_edge(1, 2));

    Graph c5 = cycle(5);
    CHECK(c5.m() == 5);
    CHECK(c5.has_edge(4, 0));

    Graph k4 = complete(4);
    CHECK(k4.m() == 6);

    Graph s3 = star(3);  // K_{1,3}: center 0
    CHECK(s3.n() == 4);
    CHECK(s3.degree(0) == 3);
    CHECK(s3.degree(1) == 1);

    Graph k23 = complete_bipartite(2, 3);
    CHECK(k23.n() == 5);
    CHECK(k23.m() == 6);
    CHECK_FALSE(k23.has_edge(0, 1));
    CHECK(k23.has_edge(0, 2));

    Graph g33 = pendant_blowup(3, 3);
    CHECK(g33.n() == 12);
    CHECK(g33.m() == 12);
    for (int v = 0; v < 3; ++v) CHECK(g33.degree(v) == 5);  // 2 core + 3 pendants
    for (int v = 3; v < 12; ++v) CHECK(g33.degree(v) == 1);

    Graph apex = cone(cycle(4));
    CHECK(apex.n() == 5);
    CHECK(apex.degree(4) == 4);
    CHECK(apex.m() == 8);

    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(pendant_blowup(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(pendant_blowup(3, 1), std::invalid_argument);
}

TEST_CASE("neighborhoods and isolated vertices") {
    Graph p3 = path(3);
    CHECK(p3.neighbors(1).members() == std::vector<int>{0, 2});
    CHECK(p3.closed_neighborhood(0).members() == std::vector<int>{0, 1});
    CHECK(p3.isolated_vertices().empty());
    Graph g(4, {{0, 1}});
    CHECK(g.isolated_vertices().members() == std::vector<int>{2, 3});
    CHECK(g.has_isolated_vertex());
}

TEST_CASE("delete_vertices keeps labels and isolated survivors") {
    Graph p3 = path(3);
    Graph rest = p3.delete_vertices(VertexSet(3, 0b010));  // drop the middle
    CHECK(rest.n() == 2);
    CHECK(rest.m() == 0);
    CHECK(rest.labels() == std::vector<std::string>{"x1", "x3"});

    Graph p5 = path(5);
    Graph sub = p5.delete_vertices(p5.closed_neighborhood(1));
    CHECK(sub.n() == 2);  // x4, x5 survive
    CHECK(sub.m() == 1);
    CHECK(sub.labels() == std::vector<std::string>{"x4", "x5"});

    Graph none = p3.delete_vertices(VertexSet::full_set(3));
    CHECK(none.n() == 0);
    CHECK(none.m() == 0);
}

TEST_CASE("minimal vertex covers: frozen cases") {
    CHECK(cover_masks(path(3)) == std::set<std::uint64_t>{0b010, 0b101});
    CHECK(cover_masks(cycle(5)) ==
          std::set<std::uint64_t>{0b01011, 0b01101, 0b10101, 0b10110, 0b11010});
    // K4: every 3-subset.
    CHECK(cover_masks(complete(4)) ==
          std::set<std::uint64_t>{0b0111, 0b1011, 0b1101, 0b1110});
    // Star: the center, or all leaves.
    CHECK(cover_masks(star(3)) == std::set<std::uint64_t>{0b0001, 0b1110});
    // Edgeless: the empty cover.
    CHECK(cover_masks(Graph(3, {})) == std::set<std::uint64_t>{0});
    // Sorted by size, then bitmask.
    auto covers = path(3).minimal_vertex_covers();
    REQUIRE(covers.size() == 2);
    CHECK(covers[0].bits() == 0b010);
    CHECK(covers[1].bits() == 0b101);
}

TEST_CASE("minimal vertex covers match brute force on every graph with n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) {
            CAPTURE(g.id());
            CHECK(cover_masks(g) == brute_minimal_covers(g));
        }
}

TEST_CASE("independence number") {
    CHECK(complete(4).independence_number() == 1);
    CHECK(cycle(5).independence_number() == 2);
    CHECK(cycle(6).independence_number() == 3);
    CHECK(path(4).independence_number() == 2);
    CHECK(star(3).independence_number() == 3);
    CHECK(Graph(4, {}).independence_number() == 4);
}

TEST_CASE("bipartiteness") {
    auto parts = path(3).is_bipartite();
    REQUIRE(parts.has_value());
    CHECK(parts->first.members() == std::vector<int>{0, 2});
    CHECK(parts->second.members() == std::vector<int>{1});

    CHECK_FALSE(cycle(5).is_bipartite().has_value());
    CHECK_FALSE(complete(3).is_bipartite().has_value());
    CHECK(cycle(6).is_bipartite().has_value());
    CHECK(complete_bipartite(3, 3).is_bipartite().has_value());

    // Isolated vertices go to the first part; every edge must cross.
    Graph g(4, {{1, 2}});
    auto p = g.is_bipartite();
    REQUIRE(p.has_value());
    CHECK(p->first.contains(0));
    CHECK(p->first.contains(3));
    for (auto [u, v] : g.edges())
        CHECK(p->first.contains(u) != p->first.contains(v));
    CHECK((p->first | p->second) == VertexSet::full_set(4));
    CHECK((p->first & p->second).empty());
}

TEST_CASE("unmixed and claw-free") {
    CHECK(cycle(4).is_unmixed());
    CHECK(cycle(5).is_unmixed());
    CHECK(complete(4).is_unmixed());
    CHECK_FALSE(path(3).is_unmixed());
    CHECK_FALSE(star(2).is_unmixed());

    CHECK(cycle(5).is_claw_free());
    CHECK(complete(4).is_claw_free());
    CHECK(path(4).is_claw_free());
    CHECK_FALSE(star(3).is_claw_free());
    CHECK_FALSE(pendant_blowup(3, 3).is_claw_free());
    // K_{1,3} plus an edge between two leaves contains no induced claw.
    Graph paw(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    CHECK(paw.is_claw_free());
}

TEST_CASE("connectivity") {
    CHECK(path(5).is_connected());
    CHECK(complete(1).is_connected());
    CHECK_FALSE(Graph(3, {{0, 1}}).is_connected());
    CHECK_FALSE(Graph(2, {}).is_connected());
    CHECK(Graph(0, {}).is_connected());
}

TEST_CASE("enumeration counts match the catalogue") {
    const std::array<std::size_t, 6> all = {1, 2, 4, 11, 34, 156};
    const std::array<std::size_t, 6> conn = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        CHECK(enumerate_graphs(n, false).size() == all[n - 1]);
        CHECK(enumerate_graphs(n, true).size() == conn[n - 1]);
    }
    CHECK_THROWS_AS(enumerate_graphs(9, false), std::invalid_argument);
}

TEST_CASE("enumeration yields pairwise non-isomorphic graphs") {
    auto graphs = enumerate_graphs(4, false);
    REQUIRE(graphs.size() == 11);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j) {
            CAPTURE(i);
            CAPTURE(j);
            CHECK_FALSE(isomorphic(graphs[i], graphs[j]));
        }
}

TEST_CASE("ratios") {
    Ratio half = parse_ratio("1/2");
    CHECK(half.num == 1);
    CHECK(half.den == 2);
    CHECK(half.str() == "1/2");
    CHECK(parse_ratio("0").num == 0);
    CHECK(parse_ratio("1").den == 1);
    CHECK_THROWS_AS(parse_ratio("3/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratio("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratio("half"), std::invalid_argument);
}

TEST_CASE("random graphs are reproducible across runs and platforms") {
    Graph g = random_graph(6, parse_ratio("1/2"), 42);
    CHECK(g.id() == "rand(6,1/2,42)");
    std::vector<std::pair<int, int>> expected = {{0, 2}, {0, 3}, {0, 4}, {0, 5},
                                                 {1, 3}, {1, 5}, {2, 4}, {2, 5}};
    CHECK(g.edges() == expected);

    Graph h = random_graph(5, parse_ratio("1/3"), 7);
    std::vector<std::pair<int, int>> expected_h = {{0, 2}, {1, 3}, {2, 3}, {2, 4}};
    CHECK(h.edges() == expected_h);

    // Same seed, same graph; degenerate probabilities are exact.
    CHECK(random_graph(6, parse_ratio("1/2"), 42).edges() == expected);
    CHECK(random_graph(5, parse_ratio("1"), 9).m() == 10);
    CHECK(random_graph(5, parse_ratio("0"), 9).m() == 0);
}

TEST_CASE("edge-list parsing") {
    std::istringstream in("# a comment\n\n3 2\n1 2\n  2 3  \n");
    Graph g = parse_edge_list(in, "sample");
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.name() == "sample");

    std::istringstream round(format_edge_list(path(4)));
    CHECK(parse_edge_list(round).m() == 3);

    auto expect_error = [](const std::string& text, const std::string& fragment) {
        std::istringstream bad(text);
        try {
            parse_edge_list(bad);
            FAIL_CHECK("expected a parse error for: " << text);
        } catch (const std::runtime_error& e) {
            std::string what = e.what();
            CAPTURE(what);
            CHECK(what.find("line") != std::string::npos);
            CHECK(what.find(fragment) != std::string::npos);
        }
    };
    expect_error("3 1\n1 1\n", "loop");
    expect_error("3 2\n1 2\n2 1\n", "duplicate");
    expect_error("3 1\n1 4\n", "range");
    expect_error("3 2\n1 2\n", "expected 2 edges");
    expect_error("3 1\n1 2\n2 3\n", "after");
    expect_error("3 1\n1 2 junk\n", "trailing");
    expect_error("oops\n", "header");
    expect_error("70 0\n", "64");
}

}  // TEST_SUITE
