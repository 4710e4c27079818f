#ifndef COVERREG_VERIFY_HPP
#define COVERREG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coverreg/betti.hpp"
#include "coverreg/cover.hpp"
#include "coverreg/field.hpp"
#include "coverreg/graph.hpp"
#include "coverreg/monomial.hpp"

namespace coverreg {

// Result of checking k·deg(J) ≤ reg(J^{(k)}) ≤ (k-1)·deg(J) + n - 1 on one
// graph. The bounds are theorems only for bipartite, unmixed, or claw-free
// graphs; elsewhere a failure is an observation, not a defect.
struct BoundsReport {
    std::string graph_id;
    int n = 0;
    int k = 0;
    bool bipartite = false;
    bool unmixed = false;
    bool claw_free = false;
    int deg = 0;
    int reg = 0;
    int lower = 0;
    int upper = 0;
    FieldTag field = FieldTag::gf2();
    bool holds = false;
    bool lower_tight = false;
    bool upper_tight = false;

    int defect() const { return reg - lower; }
    bool in_class() const { return bipartite || unmixed || claw_free; }
};

// Result of a named identity or condition check; a failing check always
// carries a witness describing the discrepancy.
struct IdentityReport {
    std::string identity;
    std::string graph_id;
    std::string parameters;
    bool pass = false;
    std::string witness;
};

// The graph with its isolated vertices dropped; labels of the surviving
// vertices are retained.
Graph reduce_isolated(const Graph& g);

// deg(I^{(k)}) >= k·deg(I), and u^k is a minimal generator of I^{(k)} for
// every minimal generator u of I. Requires a squarefree nonzero ideal and
// k >= 1; `id` labels the report.
IdentityReport check_degree_lemma(const MonomialIdeal& i, int k, const std::string& id = "ideal");

// Both regularity bounds for J(G)^{(k)}. Isolated vertices are dropped
// before the ideal is built; the reported n is the reduced vertex count.
// Requires at least one edge and k >= 1.
BoundsReport check_bounds(const Graph& g, int k, const FieldTag& f);

// Restriction to the subring without x_v: J(G) ∩ S_v equals
// u_v · J(G \ N[v]) · S_v with u_v the product of the neighbors of v.
IdentityReport check_restriction_identity(const Graph& g, int v);

// (J(G)^{(k)} : x_1⋯x_n) = J(G)^{(k-2)}, with J^{(0)} the unit ideal.
// Isolated vertices are dropped first. Requires an edge and k >= 2.
IdentityReport check_colon_identity(const Graph& g, int k);

// J(G)^k = J(G)^{(k)} for bipartite G; rejects non-bipartite input.
IdentityReport check_bipartite_power_equality(const Graph& g, int k);

// Some minimal vertex cover has at least n/2 vertices. Rejects graphs with
// isolated vertices. For bipartite, unmixed, or claw-free graphs a failure
// is a theorem violation; elsewhere it is an observation.
IdentityReport check_half_cover_condition(const Graph& g);

// Sharpness checks: the bounds coincide and regularity meets them exactly.
//   star:     reg(J(K_{1,n})^k) = k·n
//   complete: reg(J(K_n)^{(k)}) = k·(n-1)
//   cone:     reg(J(cone(H))^{(k)}) = k·deg with deg = |V(H)|, for any H
//             with independence number at most 2
IdentityReport check_star_sharpness(int n, int k, const FieldTag& f);
IdentityReport check_complete_sharpness(int n, int k, const FieldTag& f);
IdentityReport check_cone_sharpness(const Graph& h, int k, const FieldTag& f);

// (k-1)·deg(J) + n - 1 <= k·deg(J) + reg(J) - 1 for bipartite graphs:
// the theorem's upper bound improves on the classical one. Isolated
// vertices are dropped first.
IdentityReport check_bound_comparison(const Graph& g, int k, const FieldTag& f);

// Deterministic random squarefree ideal for corpus generation: up to
// max_gens generators, each the product of a nonempty random variable
// subset, then minimalized.
MonomialIdeal random_squarefree_ideal(int nvars, int max_gens, std::uint64_t seed);

// A family of graphs to sweep over.
struct FamilySpec {
    enum class Kind {
        all,              // every graph up to isomorphism, n in [n_min, n_max]
        connected,        // connected graphs up to isomorphism
        star,             // K_{1,n}, n leaves in [n_min, n_max]
        complete,         // K_n
        path,             // P_n
        cycle,            // C_n
        complete_bipartite,  // K_{a,b}, a in [a_min,a_max], b in [b_min,b_max]
        pendant_blowup,   // G_{n,s}, s in [s_min, s_max]
        cone_cycle,       // cone over C_n
        random,           // `count` samples per n with seeds seed, seed+1, ...
        file,             // one graph from an edge-list file
    };
    Kind kind = Kind::all;
    int n_min = 1, n_max = 5;
    int a_min = 1, a_max = 1;
    int b_min = 1, b_max = 1;
    int s_min = 2, s_max = 2;
    Ratio p{1, 2};
    std::uint64_t seed = 0;
    int count = 1;
    std::string path;

    std::vector<Graph> materialize() const;
};

enum class Check {
    bounds,
    degree_lemma,
    restriction,
    colon,
    bipartite_power,
    half_cover,
    sharpness,
    bound_comparison,
};

struct SweepOptions {
    FamilySpec family;
    int k_max = 1;
    FieldTag field = FieldTag::gf2();
    std::vector<Check> checks;  // empty = every applicable check
};

struct SweepResult {
    std::vector<BoundsReport> bounds;
    std::vector<IdentityReport> identities;
    std::vector<std::string> errors;  // per-item operational failures
    int violations = 0;    // failures of class-applicable claims
    int observations = 0;  // out-of-class failures (informational)
};

// Runs every requested check that applies to each graph of the family, for
// k = 1..k_max, in deterministic order. Per-item errors are collected
// without aborting the sweep.
SweepResult sweep(const SweepOptions& options);

}  // namespace coverreg

#endif
