#include "coverreg/cover.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "coverreg/caps.hpp"

namespace coverreg {

MonomialIdeal cover_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    for (const VertexSet& c : g.minimal_vertex_covers()) {
        std::vector<int> exps(static_cast<std::size_t>(g.n()), 0);
        for (int v : c.members()) exps[static_cast<std::size_t>(v)] = 1;
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(g.n(), std::move(gens));
}

std::vector<VertexSet> minimal_primes(const MonomialIdeal& i) {
    if (!i.is_squarefree()) throw std::invalid_argument("minimal_primes: squarefree ideal required");
    int n = i.nvars();
    if (n > caps().transversal_var_cap || n > 30)
        throw CapExceeded("minimal_primes: " + std::to_string(n) +
                          " variables exceed cap " + std::to_string(caps().transversal_var_cap));
    if (i.is_unit()) return {};
    std::vector<std::uint32_t> supports;
    supports.reserve(i.generators().size());
    for (const Monomial& g : i.generators()) supports.push_back(g.support_bits());
    auto hits_all = [&](std::uint32_t subset) {
        for (std::uint32_t s : supports)
            if ((s & subset) == 0) return false;
        return true;
    };
    std::vector<VertexSet> primes;
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        if (!hits_all(subset)) continue;
        bool minimal = true;
        for (std::uint32_t t = subset; t != 0; t &= t - 1) {
            std::uint32_t bit = t & ~(t - 1);
            if (hits_all(subset & ~bit)) { minimal = false; break; }
        }
        if (minimal) primes.emplace_back(n, subset);
    }
    std::sort(primes.begin(), primes.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bits() < b.bits();
    });
    return primes;
}

MonomialIdeal prime_power(const VertexSet& vars, int k) {
    if (vars.empty()) throw std::invalid_argument("prime_power: empty variable set");
    if (k < 1) throw std::invalid_argument("prime_power: k >= 1 required");
    int n = vars.ambient();
    std::vector<int> support = vars.members();
    std::vector<Monomial> gens;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    // Distribute total degree k over the support variables.
    auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == support.size()) {
            exps[static_cast<std::size_t>(support[pos])] = remaining;
            gens.emplace_back(exps);
            exps[static_cast<std::size_t>(support[pos])] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[static_cast<std::size_t>(support[pos])] = e;
            self(self, pos + 1, remaining - e);
        }
        exps[static_cast<std::size_t>(support[pos])] = 0;
    };
    recurse(recurse, 0, k);
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal symbolic_power(const MonomialIdeal& i, int k) {
    if (!i.is_squarefree())
        throw std::invalid_argument("symbolic_power: squarefree ideal required");
    if (k < 0) throw std::invalid_argument("symbolic_power: k >= 0 required");
    if (k == 0 || i.is_unit()) return MonomialIdeal::unit(i.nvars());
    if (i.is_zero()) return MonomialIdeal::zero(i.nvars());
    if (k == 1) return i;
    MonomialIdeal result = MonomialIdeal::unit(i.nvars());
    for (const VertexSet& p : minimal_primes(i))
        result = intersect(result, prime_power(p, k));
    return result;
}

}  // namespace coverreg
