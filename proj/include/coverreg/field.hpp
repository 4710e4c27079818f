#ifndef COVERREG_FIELD_HPP
#define COVERREG_FIELD_HPP

#include <string>
#include <vector>

namespace coverreg {

// Coefficient field selector for rank computations: GF(2), the rationals
// (exact fraction-free elimination), or GF(p) for a small prime p.
class FieldTag {
public:
    enum class Kind { gf2, rational, gfp };

    static FieldTag gf2() { return FieldTag(Kind::gf2, 2); }
    static FieldTag rational() { return FieldTag(Kind::rational, 0); }
    static FieldTag gfp(int p);

    // Accepts "gf2", "rational", "q", or "gf<p>" with p a small prime.
    static FieldTag parse(const std::string& text);

    Kind kind() const { return kind_; }
    int prime() const { return p_; }
    std::string str() const;

    bool operator==(const FieldTag& other) const {
        return kind_ == other.kind_ && p_ == other.p_;
    }
    bool operator!=(const FieldTag& other) const { return !(*this == other); }

private:
    FieldTag(Kind kind, int p) : kind_(kind), p_(p) {}
    Kind kind_;
    int p_;
};

// Rank of an integer matrix over the given field, by dense exact
// elimination: bitset Gaussian elimination for GF(2), modular elimination
// for GF(p), and fraction-free Bareiss elimination for the rationals.
// Entries are machine integers (boundary matrices only need {-1, 0, 1}).
int matrix_rank(std::vector<std::vector<int>> m, const FieldTag& f);

// Rank over `f` of a sparse integer matrix given column by column: each
// column lists (row, coefficient) pairs with rows in [0, rows); repeated
// rows within a column are summed. Exact over every field — the rational
// path eliminates with integer cross-multiplication and strips each
// column's content, so entries stay small on the near-unimodular boundary
// matrices this is built for. Agrees with matrix_rank on dense input.
int sparse_matrix_rank(std::size_t rows,
                       std::vector<std::vector<std::pair<int, int>>> columns,
                       const FieldTag& f);

}  // namespace coverreg

#endif
