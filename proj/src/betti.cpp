#include "coverreg/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "coverreg/caps.hpp"

namespace coverreg {

bool multidegree_less(const std::vector<int>& a, const std::vector<int>& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a > b;
}

void BettiTable::set(int i, const std::vector<int>& multidegree, int rank) {
    if (i < 0) throw std::invalid_argument("betti table: negative homological index");
    if (rank <= 0) throw std::invalid_argument("betti table: rank must be positive");
    if (!entries_.emplace(Key{i, multidegree}, rank).second)
        throw std::invalid_argument("betti table: duplicate entry");
}

int BettiTable::rank(int i, const std::vector<int>& multidegree) const {
    auto hit = entries_.find(Key{i, multidegree});
    return hit == entries_.end() ? 0 : hit->second;
}

int BettiTable::regularity() const {
    int reg = 0;
    for (const auto& [key, rank] : entries_) {
        int total = std::accumulate(key.second.begin(), key.second.end(), 0);
        reg = std::max(reg, total - key.first);
    }
    return reg;
}

std::string BettiTable::to_text() const {
    std::ostringstream out;
    for (const auto& [key, rank] : entries_) {
        out << key.first << " |";
        for (int e : key.second) out << ' ' << e;
        out << " | " << rank << '\n';
    }
    return out.str();
}

std::vector<std::vector<int>> lcm_lattice(const MonomialIdeal& i) {
    if (i.is_zero() || i.is_unit())
        throw std::invalid_argument("lcm_lattice: nonzero, non-unit ideal required");
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (const Monomial& g : i.generators()) {
        if (seen.insert(g.exponents()).second) queue.push_back(g.exponents());
    }
    while (!queue.empty()) {
        std::vector<int> a = std::move(queue.front());
        queue.pop_front();
        for (const Monomial& g : i.generators()) {
            std::vector<int> join(a.size());
            for (std::size_t t = 0; t < a.size(); ++t)
                join[t] = std::max(a[t], g.exponents()[t]);
            if (seen.insert(join).second) {
                if (seen.size() > caps().lattice_cap)
                    throw CapExceeded("lcm_lattice: size exceeds cap " +
                                      std::to_string(caps().lattice_cap));
                queue.push_back(std::move(join));
            }
        }
    }
    std::vector<std::vector<int>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), multidegree_less);
    return out;
}

SimplicialComplexView upper_koszul_complex(const MonomialIdeal& i, const std::vector<int>& a) {
    if (static_cast<int>(a.size()) != i.nvars())
        throw std::invalid_argument("upper_koszul_complex: multidegree size mismatch");
    std::vector<int> support;
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (a[t] < 0) throw std::invalid_argument("upper_koszul_complex: negative multidegree");
        if (a[t] > 0) support.push_back(static_cast<int>(t));
    }
    if (static_cast<int>(support.size()) > caps().koszul_ground_cap)
        throw CapExceeded("upper_koszul_complex: support of " +
                          std::to_string(support.size()) + " exceeds cap");
    std::vector<std::uint32_t> faces;
    std::vector<int> quotient = a;
    for (std::uint32_t mask = 0; mask < (1u << support.size()); ++mask) {
        for (std::size_t t = 0; t < support.size(); ++t)
            quotient[static_cast<std::size_t>(support[t])] =
                a[static_cast<std::size_t>(support[t])] - (((mask >> t) & 1u) ? 1 : 0);
        if (i.contains(Monomial(quotient))) faces.push_back(mask);
    }
    return SimplicialComplexView(std::move(support), std::move(faces));
}

BettiTable betti_numbers(const MonomialIdeal& i, const FieldTag& f) {
    BettiTable table(f);
    for (const std::vector<int>& a : lcm_lattice(i)) {
        SimplicialComplexView complex = upper_koszul_complex(i, a);
        for (auto [dim, rank] : reduced_homology_ranks(complex, f))
            if (rank > 0) table.set(dim + 1, a, rank);
    }
    return table;
}

namespace {

bool divides_vec(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t] > b[t]) return false;
    return true;
}

}  // namespace

BettiTable betti_via_lcm_order_complex(const MonomialIdeal& i, const FieldTag& f) {
    BettiTable table(f);
    std::vector<std::vector<int>> lattice = lcm_lattice(i);
    for (const std::vector<int>& a : lattice) {
        // The open interval strictly below a; canonical lattice order is a
        // linear extension of divisibility.
        std::vector<const std::vector<int>*> interval;
        for (const std::vector<int>& b : lattice) {
            if (&b == &a) continue;
            if (b != a && divides_vec(b, a)) interval.push_back(&b);
        }
        if (interval.empty()) {
            // a is a minimal generator: the order complex of the empty
            // interval is the irrelevant complex, giving a beta_0 entry.
            table.set(0, a, 1);
            continue;
        }
        // Strict divisibility between interval elements, as bitsets:
        // succ[s] has bit t set when interval[s] strictly divides
        // interval[t]. Degree order is a linear extension, so only t > s
        // needs testing.
        std::size_t sz = interval.size();
        std::size_t words = (sz + 63) / 64;
        std::vector<std::vector<std::uint64_t>> succ(sz, std::vector<std::uint64_t>(words, 0));
        std::vector<std::vector<std::uint64_t>> comp = succ;
        for (std::size_t s = 0; s < sz; ++s)
            for (std::size_t t = s + 1; t < sz; ++t)
                if (divides_vec(*interval[s], *interval[t])) {
                    succ[s][t / 64] |= 1ull << (t % 64);
                    comp[s][t / 64] |= 1ull << (t % 64);
                    comp[t][s / 64] |= 1ull << (s % 64);
                }
        // Cone point: an element comparable to every other makes the order
        // complex a cone, so all reduced homology vanishes.
        bool cone = false;
        for (std::size_t s = 0; s < sz && !cone; ++s) {
            int comparable = 0;
            for (std::size_t w = 0; w < words; ++w)
                comparable += std::popcount(comp[s][w]);
            cone = comparable == static_cast<int>(sz) - 1;
        }
        if (cone) continue;
        // Faces of the order complex are all chains; consecutive
        // divisibility suffices since divisibility is transitive. Chains
        // are transient homology input, so they get an order of magnitude
        // more room than the lattice itself before aborting.
        std::size_t chain_cap = 10 * caps().lattice_cap;
        std::vector<std::vector<std::vector<int>>> faces_by_size{{{}}};
        std::size_t chain_count = 1;
        std::vector<int> chain;
        auto extend = [&](auto&& self, std::size_t from) -> void {
            for (std::size_t next = from; next < sz; ++next) {
                if (!chain.empty() &&
                    !((succ[static_cast<std::size_t>(chain.back())][next / 64] >>
                       (next % 64)) &
                      1ull))
                    continue;
                chain.push_back(static_cast<int>(next));
                if (faces_by_size.size() <= chain.size())
                    faces_by_size.resize(chain.size() + 1);
                faces_by_size[chain.size()].push_back(chain);
                if (++chain_count > chain_cap)
                    throw CapExceeded("order complex: chain count exceeds cap " +
                                      std::to_string(chain_cap));
                self(self, next + 1);
                chain.pop_back();
            }
        };
        extend(extend, 0);
        std::vector<int> ranks = reduced_homology_by_size(faces_by_size, f);
        for (std::size_t s = 0; s < ranks.size(); ++s)
            if (ranks[s] > 0) table.set(static_cast<int>(s), a, ranks[s]);
    }
    return table;
}

int regularity(const MonomialIdeal& i, const FieldTag& f) {
    if (i.is_zero()) throw std::invalid_argument("regularity: nonzero ideal required");
    if (i.is_unit()) return 0;
    return betti_numbers(i, f).regularity();
}

}  // namespace coverreg
