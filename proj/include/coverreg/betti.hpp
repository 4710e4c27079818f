#ifndef COVERREG_BETTI_HPP
#define COVERREG_BETTI_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coverreg/field.hpp"
#include "coverreg/homology.hpp"
#include "coverreg/monomial.hpp"

namespace coverreg {

// Canonical order on multidegrees: total degree, then descending
// lexicographic on the exponent vector (the generator order).
bool multidegree_less(const std::vector<int>& a, const std::vector<int>& b);

// Nonzero multigraded Betti numbers of a monomial ideal over one field:
// entries (homological index i, multidegree a) -> positive rank.
class BettiTable {
public:
    explicit BettiTable(const FieldTag& field) : field_(field) {}

    void set(int i, const std::vector<int>& multidegree, int rank);
    int rank(int i, const std::vector<int>& multidegree) const;  // 0 when absent
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const FieldTag& field() const { return field_; }

    // max over entries of |a| - i; 0 for an empty table.
    int regularity() const;

    // One line per entry, "i | a1 a2 ... an | rank", sorted by homological
    // index then canonical multidegree order.
    std::string to_text() const;

    // Compares entries only, not the field tag.
    bool operator==(const BettiTable& other) const { return entries_ == other.entries_; }
    bool operator!=(const BettiTable& other) const { return !(*this == other); }

    using Key = std::pair<int, std::vector<int>>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            if (a.first != b.first) return a.first < b.first;
            return multidegree_less(a.second, b.second);
        }
    };
    const std::map<Key, int, KeyLess>& entries() const { return entries_; }

private:
    FieldTag field_;
    std::map<Key, int, KeyLess> entries_;
};

// The lcm lattice of a nonzero, non-unit monomial ideal: the closure of the
// generator exponent vectors under componentwise max, sorted canonically.
std::vector<std::vector<int>> lcm_lattice(const MonomialIdeal& i);

// The upper Koszul complex K^a(i): ground set supp(a), faces
// { W ⊆ supp(a) : x^a / x_W ∈ i }.
SimplicialComplexView upper_koszul_complex(const MonomialIdeal& i, const std::vector<int>& a);

// Multigraded Betti numbers via reduced homology of the upper Koszul
// complexes over the lcm lattice: beta_{i,a} = dim H~_{i-1}(K^a).
BettiTable betti_numbers(const MonomialIdeal& i, const FieldTag& f);

// Independent cross-validation oracle: beta_{i,a} is computed as reduced
// homology of the order complex of the open interval below a in the lcm
// lattice. Must produce a table identical to betti_numbers.
BettiTable betti_via_lcm_order_complex(const MonomialIdeal& i, const FieldTag& f);

// Castelnuovo–Mumford regularity: max (|a| - i) over nonzero Betti entries.
// The unit ideal has regularity 0 by convention; the zero ideal is rejected.
int regularity(const MonomialIdeal& i, const FieldTag& f);

}  // namespace coverreg

#endif
