#ifndef COVERREG_MONOMIAL_HPP
#define COVERREG_MONOMIAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace coverreg {

/// A monomial in a fixed number of variables: an exponent vector with a
/// cached total degree. Exponent arithmetic is overflow-checked.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int nvars);
    static Monomial variable(int nvars, int index);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int exponent(int i) const { return exps_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& exponents() const { return exps_; }

    bool is_one() const { return degree_ == 0; }
    bool is_squarefree() const;
    std::uint32_t support_bits() const;  // requires nvars <= 32

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    Monomial pow(int k) const;
    /// this / gcd(this, m): the generator image under (I : m).
    Monomial quotient_by_gcd(const Monomial& m) const;
    /// Drop variable v (its exponent must be zero).
    Monomial drop_var(int v) const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    /// "x1 x3^2"; "1" for the trivial monomial.
    std::string str() const;

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Canonical generator order: total degree ascending, ties by lexicographic
/// order with x1 heaviest (so x1^2 precedes x1 x2 precedes x2^2).
bool monomial_less(const Monomial& a, const Monomial& b);

/// A monomial ideal held by its minimal generators: divisibility-minimal,
/// deduplicated, canonically sorted. The unit ideal is generated by 1; the
/// zero ideal has no generators.
class MonomialIdeal {
public:
    MonomialIdeal(int nvars, std::vector<Monomial> gens);

    static MonomialIdeal zero(int nvars);
    static MonomialIdeal unit(int nvars);

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_squarefree() const;
    bool contains(const Monomial& m) const;

    /// Maximum generator degree. Unit ideal: 0. Zero ideal: error.
    int degree() const;

    bool operator==(const MonomialIdeal& other) const;
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

    /// Canonical text form: "ring n" header, one generator per line.
    std::string to_text() const;
    static MonomialIdeal from_text(std::istream& in);

private:
    int nvars_ = 0;
    std::vector<Monomial> gens_;
};

/// Retain exactly the divisibility-minimal elements of gens.
MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int k);
MonomialIdeal colon(const MonomialIdeal& i, const Monomial& m);

/// The ideal of the (n-1)-variable subring generated by the v-free
/// generators of i, re-indexed.
MonomialIdeal restrict_away(const MonomialIdeal& i, int v);

/// Re-embed an ideal into a larger ring: variable j of i becomes variable
/// var_positions[j] of the result.
MonomialIdeal embed(const MonomialIdeal& i, const std::vector<int>& var_positions, int ambient);

}  // namespace coverreg

#endif
