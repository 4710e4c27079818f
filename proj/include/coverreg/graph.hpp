#ifndef COVERREG_GRAPH_HPP
#define COVERREG_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coverreg {

// A subset of the vertices {0, ..., ambient-1} of a graph, stored as a
// bitmask. Ambient size is limited to 64 vertices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(int ambient, std::uint64_t bits);
    static VertexSet empty_set(int ambient);
    static VertexSet full_set(int ambient);

    int ambient() const { return ambient_; }
    std::uint64_t bits() const { return bits_; }
    int size() const;
    bool empty() const { return bits_ == 0; }
    bool contains(int v) const;
    std::vector<int> members() const;

    VertexSet& insert(int v);
    VertexSet& erase(int v);
    VertexSet complement() const;
    VertexSet minus(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
    friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
    bool operator==(const VertexSet& other) const;
    bool operator!=(const VertexSet& other) const { return !(*this == other); }

    // "{x1, x3}" with 1-based vertex names; "{}" for the empty set.
    std::string str() const;

private:
    int ambient_ = 0;
    std::uint64_t bits_ = 0;
};

// A finite simple graph on vertices 0..n-1 with an ordered list of distinct
// vertex labels (default "x1".."xn"). Immutable after construction.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges, std::string name = "",
          std::vector<std::string> labels = {});

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Canonical identifier for reports: the name when one was assigned,
    // otherwise "n<count>:" followed by the sorted 1-based edge list.
    std::string id() const;

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    VertexSet neighbors(int v) const;
    VertexSet closed_neighborhood(int v) const;
    VertexSet vertex_set() const;
    VertexSet isolated_vertices() const;
    bool has_isolated_vertex() const { return !isolated_vertices().empty(); }

    // Induced subgraph on V \ a; labels of the surviving vertices are kept,
    // and the survivors are reindexed in ascending original order. Vertices
    // that become isolated are retained.
    Graph delete_vertices(const VertexSet& a) const;

    // All minimal vertex covers, as complements of the maximal independent
    // sets, sorted by cardinality then bitmask. Edgeless graphs yield {∅}.
    std::vector<VertexSet> minimal_vertex_covers() const;

    int independence_number() const;

    // Two-coloring via breadth-first search, or nullopt when an odd cycle
    // exists. Isolated vertices land in the first part.
    std::optional<std::pair<VertexSet, VertexSet>> is_bipartite() const;

    bool is_unmixed() const;
    bool is_claw_free() const;
    bool is_connected() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> adj_;
    std::string name_;
    std::vector<std::string> labels_;
};

// Named families. Vertex orderings are deterministic and documented here:
// complete/path/cycle use vertices 0..n-1 in the natural order; in
// complete_bipartite the first part comes first; pendant_blowup lists the
// K_n vertices first, then the leaves grouped by attachment vertex; cone
// appends the apex as the last vertex.
Graph complete(int n);                       // n >= 1
Graph complete_bipartite(int a, int b);      // a, b >= 1
Graph star(int n);                           // = complete_bipartite(1, n)
Graph path(int n);                           // n >= 1
Graph cycle(int n);                          // n >= 3
Graph pendant_blowup(int n, int s);          // n >= 3, s >= 2
Graph cone(const Graph& h);

// All simple graphs on n labeled vertices, one representative per
// isomorphism class (minimum edge-bitmask over all vertex permutations),
// in ascending canonical-mask order. Hard cap n <= 8.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

// An exact probability num/den with num <= den.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    std::string str() const;
};

// Parses "a/b", "0" or "1"; rejects anything else or num > den.
Ratio parse_ratio(const std::string& text);

// Erdős–Rényi graph: each pair {i,j}, enumerated in row-major order
// (0,1), (0,2), ..., (n-2,n-1), is an edge with probability p. Driven by
// the SplitMix64 generator, so identical (n, p, seed) give bit-identical
// graphs on every platform.
Graph random_graph(int n, const Ratio& p, std::uint64_t seed);

// The SplitMix64 step function (public for reuse in test-corpus plumbing).
std::uint64_t splitmix64(std::uint64_t& state);

// Edge-list text format: first content line "n m", then m lines "i j" with
// 1-based endpoints; blank lines and lines starting with '#' are ignored.
// Loops, duplicates, and out-of-range indices are rejected with
// line-numbered errors.
Graph parse_edge_list(std::istream& in, const std::string& name = "");
std::string format_edge_list(const Graph& g);

}  // namespace coverreg

#endif
