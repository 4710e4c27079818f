#ifndef COVERREG_COVER_HPP
#define COVERREG_COVER_HPP

#include <vector>

#include "coverreg/graph.hpp"
#include "coverreg/monomial.hpp"

namespace coverreg {

// The cover ideal J(G): one generator ∏_{x∈C} x per minimal vertex cover C,
// in the polynomial ring on all n vertices. Edgeless graphs give the unit
// ideal (the empty intersection of edge primes is the whole ring).
MonomialIdeal cover_ideal(const Graph& g);

// Minimal primes of a squarefree monomial ideal, as variable subsets: the
// minimal transversals of the generator supports, found by brute force over
// all subsets. The unit ideal has no minimal primes; the zero ideal has {∅}.
std::vector<VertexSet> minimal_primes(const MonomialIdeal& i);

// The ideal generated by every monomial of total degree exactly k supported
// on the given variables.
MonomialIdeal prime_power(const VertexSet& vars, int k);

// The k-th symbolic power of a squarefree monomial ideal: the intersection
// of the k-th powers of its minimal primes, folded left-to-right with
// minimalization after every step. k = 0 gives the unit ideal.
MonomialIdeal symbolic_power(const MonomialIdeal& i, int k);

}  // namespace coverreg

#endif
