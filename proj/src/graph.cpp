#include "coverreg/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coverreg {

VertexSet::VertexSet(int ambient, std::uint64_t bits) : ambient_(ambient), bits_(bits) {
    if (ambient < 0 || ambient > 64) throw std::invalid_argument("vertex set ambient out of range");
    if (ambient < 64 && (bits >> ambient) != 0)
        throw std::invalid_argument("vertex set member out of range");
}

VertexSet VertexSet::empty_set(int ambient) { return VertexSet(ambient, 0); }

VertexSet VertexSet::full_set(int ambient) {
    std::uint64_t all = (ambient == 64) ? ~0ull : ((1ull << ambient) - 1);
    return VertexSet(ambient, all);
}

int VertexSet::size() const { return std::popcount(bits_); }

bool VertexSet::contains(int v) const {
    return v >= 0 && v < ambient_ && ((bits_ >> v) & 1u);
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (int v = 0; v < ambient_; ++v)
        if ((bits_ >> v) & 1u) out.push_back(v);
    return out;
}

VertexSet& VertexSet::insert(int v) {
    if (v < 0 || v >= ambient_) throw std::invalid_argument("vertex index out of range");
    bits_ |= (1ull << v);
    return *this;
}

VertexSet& VertexSet::erase(int v) {
    if (v < 0 || v >= ambient_) throw std::invalid_argument("vertex index out of range");
    bits_ &= ~(1ull << v);
    return *this;
}

VertexSet VertexSet::complement() const {
    return VertexSet(ambient_, full_set(ambient_).bits_ & ~bits_);
}

VertexSet VertexSet::minus(const VertexSet& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("mixed ambient sizes");
    return VertexSet(ambient_, bits_ & ~other.bits_);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("mixed ambient sizes");
    return (bits_ & ~other.bits_) == 0;
}

VertexSet operator|(const VertexSet& a, const VertexSet& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("mixed ambient sizes");
    return VertexSet(a.ambient_, a.bits_ | b.bits_);
}

VertexSet operator&(const VertexSet& a, const VertexSet& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("mixed ambient sizes");
    return VertexSet(a.ambient_, a.bits_ & b.bits_);
}

bool VertexSet::operator==(const VertexSet& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("mixed ambient sizes");
    return bits_ == other.bits_;
}

std::string VertexSet::str() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int v : members()) {
        if (!first) out << ", ";
        first = false;
        out << 'x' << (v + 1);
    }
    out << '}';
    return out.str();
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, std::string name,
             std::vector<std::string> labels)
    : n_(n), name_(std::move(name)), labels_(std::move(labels)) {
    if (n < 0 || n > 64) throw std::invalid_argument("vertex count out of range");
    if (labels_.empty()) {
        labels_.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) labels_.push_back("x" + std::to_string(v + 1));
    }
    if (static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label count differs from vertex count");
    adj_.assign(static_cast<std::size_t>(n), 0);
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge rejected");
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)] |= (1ull << v);
        adj_[static_cast<std::size_t>(v)] |= (1ull << u);
    }
}

std::string Graph::id() const {
    if (!name_.empty()) return name_;
    std::ostringstream out;
    out << 'n' << n_ << ':';
    bool first = true;
    for (auto [u, v] : edges_) {
        if (!first) out << ',';
        first = false;
        out << (u + 1) << '-' << (v + 1);
    }
    return out.str();
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

int Graph::degree(int v) const { return neighbors(v).size(); }

VertexSet Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
    return VertexSet(n_, adj_[static_cast<std::size_t>(v)]);
}

VertexSet Graph::closed_neighborhood(int v) const {
    VertexSet s = neighbors(v);
    return s.insert(v);
}

VertexSet Graph::vertex_set() const { return VertexSet::full_set(n_); }

VertexSet Graph::isolated_vertices() const {
    VertexSet s = VertexSet::empty_set(n_);
    for (int v = 0; v < n_; ++v)
        if (adj_[static_cast<std::size_t>(v)] == 0) s.insert(v);
    return s;
}

Graph Graph::delete_vertices(const VertexSet& a) const {
    if (a.ambient() != n_) throw std::invalid_argument("mixed ambient sizes");
    std::vector<int> new_index(static_cast<std::size_t>(n_), -1);
    std::vector<std::string> labels;
    int kept = 0;
    for (int v = 0; v < n_; ++v) {
        if (a.contains(v)) continue;
        new_index[static_cast<std::size_t>(v)] = kept++;
        labels.push_back(labels_[static_cast<std::size_t>(v)]);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : edges_)
        if (!a.contains(u) && !a.contains(v))
            edges.emplace_back(new_index[static_cast<std::size_t>(u)],
                               new_index[static_cast<std::size_t>(v)]);
    return Graph(kept, std::move(edges), "", std::move(labels));
}

namespace {

// Bron–Kerbosch with pivoting over an adjacency-bitmask table.
void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p,
                   std::uint64_t x, std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    std::uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (std::uint64_t t = px; t != 0; t &= t - 1) {
        int u = std::countr_zero(t);
        int gain = std::popcount(p & adj[static_cast<std::size_t>(u)]);
        if (gain > best) { best = gain; pivot = u; }
    }
    std::uint64_t candidates = p & ~adj[static_cast<std::size_t>(pivot)];
    for (std::uint64_t t = candidates; t != 0; t &= t - 1) {
        int v = std::countr_zero(t);
        std::uint64_t bit = 1ull << v;
        bron_kerbosch(adj, r | bit, p & adj[static_cast<std::size_t>(v)],
                      x & adj[static_cast<std::size_t>(v)], out);
        p &= ~bit;
        x |= bit;
    }
}

}  // namespace

std::vector<VertexSet> Graph::minimal_vertex_covers() const {
    // Maximal independent sets of G are the maximal cliques of the complement.
    std::uint64_t all = VertexSet::full_set(n_).bits();
    std::vector<std::uint64_t> co_adj(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
        co_adj[static_cast<std::size_t>(v)] =
            all & ~adj_[static_cast<std::size_t>(v)] & ~(1ull << v);
    std::vector<std::uint64_t> independent;
    bron_kerbosch(co_adj, 0, all, 0, independent);
    std::vector<VertexSet> covers;
    covers.reserve(independent.size());
    for (std::uint64_t w : independent) covers.emplace_back(n_, all & ~w);
    std::sort(covers.begin(), covers.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bits() < b.bits();
    });
    return covers;
}

int Graph::independence_number() const {
    int best = 0;
    for (const VertexSet& c : minimal_vertex_covers()) best = std::max(best, n_ - c.size());
    return best;
}

std::optional<std::pair<VertexSet, VertexSet>> Graph::is_bipartite() const {
    std::vector<int> color(static_cast<std::size_t>(n_), -1);
    for (int start = 0; start < n_; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : neighbors(v).members()) {
                if (color[static_cast<std::size_t>(u)] == -1) {
                    color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
                    queue.push_back(u);
                } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet a = VertexSet::empty_set(n_), b = VertexSet::empty_set(n_);
    for (int v = 0; v < n_; ++v)
        (color[static_cast<std::size_t>(v)] == 0 ? a : b).insert(v);
    return std::make_pair(a, b);
}

bool Graph::is_unmixed() const {
    std::vector<VertexSet> covers = minimal_vertex_covers();
    for (const VertexSet& c : covers)
        if (c.size() != covers.front().size()) return false;
    return true;
}

bool Graph::is_claw_free() const {
    for (int v = 0; v < n_; ++v) {
        std::vector<int> nb = neighbors(v).members();
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!has_edge(nb[i], nb[j]) && !has_edge(nb[i], nb[k]) &&
                        !has_edge(nb[j], nb[k]))
                        return false;
    }
    return true;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::uint64_t seen = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        std::uint64_t fresh = adj_[static_cast<std::size_t>(v)] & ~seen;
        seen |= fresh;
        for (std::uint64_t t = fresh; t != 0; t &= t - 1)
            queue.push_back(std::countr_zero(t));
    }
    return seen == VertexSet::full_set(n_).bits();
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges), "K" + std::to_string(n));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: a, b >= 1 required");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, std::move(edges), "K" + std::to_string(a) + "," + std::to_string(b));
}

Graph star(int n) { return complete_bipartite(1, n); }

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: n >= 1 required");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges), "P" + std::to_string(n));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges), "C" + std::to_string(n));
}

Graph pendant_blowup(int n, int s) {
    if (n < 3 || s < 2) throw std::invalid_argument("pendant_blowup: n >= 3 and s >= 2 required");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    for (int v = 0; v < n; ++v)
        for (int t = 0; t < s; ++t) edges.emplace_back(v, n + v * s + t);
    return Graph(n + n * s, std::move(edges), "G" + std::to_string(n) + "," + std::to_string(s));
}

Graph cone(const Graph& h) {
    std::vector<std::pair<int, int>> edges = h.edges();
    for (int v = 0; v < h.n(); ++v) edges.emplace_back(v, h.n());
    return Graph(h.n() + 1, std::move(edges), "cone(" + h.id() + ")");
}

namespace {

int pair_index(int n, int i, int j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    if (n < 0 || n > 8) throw std::invalid_argument("enumerate_graphs: n <= 8 required");
    if (n == 0) return {};
    int bits = n * (n - 1) / 2;
    // One bit-relabeling table per non-identity vertex permutation.
    std::vector<std::vector<int>> perm_maps;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<int> map(static_cast<std::size_t>(bits));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int pi = perm[static_cast<std::size_t>(i)], pj = perm[static_cast<std::size_t>(j)];
                if (pi > pj) std::swap(pi, pj);
                map[static_cast<std::size_t>(pair_index(n, i, j))] = pair_index(n, pi, pj);
            }
        perm_maps.push_back(std::move(map));
    }
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        bool canonical = true;
        for (const std::vector<int>& map : perm_maps) {
            std::uint32_t image = 0;
            for (std::uint32_t t = mask; t != 0; t &= t - 1)
                image |= 1u << map[static_cast<std::size_t>(std::countr_zero(t))];
            if (image < mask) { canonical = false; break; }
        }
        if (!canonical) continue;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((mask >> pair_index(n, i, j)) & 1u) edges.emplace_back(i, j);
        Graph g(n, std::move(edges));
        if (connected_only && !g.is_connected()) continue;
        out.push_back(std::move(g));
    }
    return out;
}

std::string Ratio::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Ratio parse_ratio(const std::string& text) {
    std::uint64_t num = 0, den = 1;
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            num = std::stoull(text);
        } else {
            num = std::stoull(text.substr(0, slash));
            den = std::stoull(text.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("probability must be 'a/b', '0' or '1': " + text);
    }
    if (den == 0 || num > den)
        throw std::invalid_argument("probability must lie in [0, 1]: " + text);
    return Ratio{num, den};
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Graph random_graph(int n, const Ratio& p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_graph: n >= 0 required");
    std::uint64_t state = seed;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::uint64_t draw = splitmix64(state);
            // Edge iff draw/2^64 < num/den, in exact integer arithmetic.
            bool edge = static_cast<unsigned __int128>(draw) * p.den <
                        (static_cast<unsigned __int128>(p.num) << 64);
            if (edge) edges.emplace_back(i, j);
        }
    std::string name = "rand(" + std::to_string(n) + "," + p.str() + "," + std::to_string(seed) + ")";
    return Graph(n, std::move(edges), std::move(name));
}

Graph parse_edge_list(std::istream& in, const std::string& name) {
    std::string line;
    int line_no = 0, n = -1, m = -1, read = 0;
    std::vector<std::pair<int, int>> edges;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0) fail("expected header 'n m'");
            if (n > 64) fail("vertex count exceeds 64");
            continue;
        }
        if (read == m) fail("unexpected content after " + std::to_string(m) + " edges");
        int u = 0, v = 0;
        if (!(ls >> u >> v)) fail("expected edge 'i j'");
        std::string extra;
        if (ls >> extra) fail("trailing content '" + extra + "'");
        if (u < 1 || u > n || v < 1 || v > n)
            fail("vertex index out of range [1, " + std::to_string(n) + "]");
        if (u == v) fail("self-loop " + std::to_string(u) + " " + std::to_string(v));
        int lo = std::min(u, v) - 1, hi = std::max(u, v) - 1;
        if (std::find(edges.begin(), edges.end(), std::make_pair(lo, hi)) != edges.end())
            fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(lo, hi);
        ++read;
    }
    ++line_no;
    if (n < 0) fail("missing header 'n m'");
    if (read < m) fail("expected " + std::to_string(m) + " edges, found " + std::to_string(read));
    return Graph(n, std::move(edges), name);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << (u + 1) << ' ' << (v + 1) << '\n';
    return out.str();
}

}  // namespace coverreg
