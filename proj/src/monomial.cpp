#include "coverreg/monomial.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "coverreg/caps.hpp"

namespace coverreg {

namespace {

int checked_add(int a, int b) {
    long long s = static_cast<long long>(a) + b;
    if (s > std::numeric_limits<int>::max())
        throw std::overflow_error("monomial exponent overflow");
    return static_cast<int>(s);
}

int checked_mul(int a, int b) {
    long long p = static_cast<long long>(a) * b;
    if (p > std::numeric_limits<int>::max())
        throw std::overflow_error("monomial exponent overflow");
    return static_cast<int>(p);
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    long long d = 0;
    for (int e : exps_) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        d += e;
        if (d > std::numeric_limits<int>::max())
            throw std::overflow_error("monomial degree overflow");
    }
    degree_ = static_cast<int>(d);
}

Monomial Monomial::one(int nvars) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

Monomial Monomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return Monomial(std::move(e));
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

std::uint32_t Monomial::support_bits() const {
    if (nvars() > 32) throw std::invalid_argument("support_bits needs nvars <= 32");
    std::uint32_t b = 0;
    for (int i = 0; i < nvars(); ++i)
        if (exps_[static_cast<std::size_t>(i)] > 0) b |= (1u << i);
    return b;
}

bool Monomial::divides(const Monomial& other) const {
    if (nvars() != other.nvars()) throw std::invalid_argument("mixed ambient sizes");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (nvars() != other.nvars()) throw std::invalid_argument("mixed ambient sizes");
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] = checked_add(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] = checked_mul(exps_[i], k);
    return Monomial(std::move(e));
}

Monomial Monomial::quotient_by_gcd(const Monomial& m) const {
    if (nvars() != m.nvars()) throw std::invalid_argument("mixed ambient sizes");
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] = exps_[i] - std::min(exps_[i], m.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::drop_var(int v) const {
    if (v < 0 || v >= nvars()) throw std::invalid_argument("variable index out of range");
    if (exps_[static_cast<std::size_t>(v)] != 0)
        throw std::invalid_argument("drop_var on a variable with positive exponent");
    std::vector<int> e;
    e.reserve(exps_.size() - 1);
    for (int i = 0; i < nvars(); ++i)
        if (i != v) e.push_back(exps_[static_cast<std::size_t>(i)]);
    return Monomial(std::move(e));
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < nvars(); ++i) {
        int e = exps_[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!first) out << ' ';
        first = false;
        out << 'x' << (i + 1);
        if (e > 1) out << '^' << e;
    }
    return out.str();
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mixed ambient sizes");
    std::vector<int> e(static_cast<std::size_t>(a.nvars()));
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a.exponents()[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mixed ambient sizes");
    std::vector<int> e(static_cast<std::size_t>(a.nvars()));
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::min(a.exponents()[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() > b.exponents();
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
    for (const Monomial& g : gens)
        if (g.nvars() != nvars) throw std::invalid_argument("mixed ambient sizes");
    std::sort(gens.begin(), gens.end(), monomial_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // degree-sorted, so a divisor always precedes its multiples
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& kept : gens_) {
            if (kept.divides(g)) { redundant = true; break; }
        }
        if (!redundant) gens_.push_back(g);
    }
}

MonomialIdeal MonomialIdeal::zero(int nvars) { return MonomialIdeal(nvars, {}); }

MonomialIdeal MonomialIdeal::unit(int nvars) {
    return MonomialIdeal(nvars, {Monomial::one(nvars)});
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.nvars() != nvars_) throw std::invalid_argument("mixed ambient sizes");
    for (const Monomial& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

int MonomialIdeal::degree() const {
    if (is_zero()) throw std::invalid_argument("degree of the zero ideal");
    return gens_.back().degree();
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("mixed ambient sizes");
    return gens_ == other.gens_;
}

std::string MonomialIdeal::to_text() const {
    std::ostringstream out;
    out << "ring " << nvars_ << '\n';
    for (const Monomial& g : gens_) out << g.str() << '\n';
    return out.str();
}

MonomialIdeal MonomialIdeal::from_text(std::istream& in) {
    std::string line;
    int nvars = -1;
    std::vector<Monomial> gens;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (nvars < 0) {
            std::string kw;
            if (!(ls >> kw >> nvars) || kw != "ring" || nvars < 0)
                throw std::runtime_error("ideal text: expected 'ring n' header");
            continue;
        }
        std::string factor;
        std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
        bool any = false;
        while (ls >> factor) {
            any = true;
            if (factor == "1") continue;
            std::size_t caret = factor.find('^');
            std::string var = factor.substr(0, caret);
            int e = 1;
            if (caret != std::string::npos) e = std::stoi(factor.substr(caret + 1));
            if (var.empty() || var[0] != 'x')
                throw std::runtime_error("ideal text: bad factor '" + factor + "'");
            int idx = std::stoi(var.substr(1)) - 1;
            if (idx < 0 || idx >= nvars)
                throw std::runtime_error("ideal text: variable out of range in '" + factor + "'");
            exps[static_cast<std::size_t>(idx)] += e;
        }
        if (any) gens.emplace_back(std::move(exps));
    }
    if (nvars < 0) throw std::runtime_error("ideal text: missing 'ring n' header");
    return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens) {
    return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mixed ambient sizes");
    if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.nvars());
    std::size_t pairs = a.generators().size() * b.generators().size();
    if (pairs > caps().generator_cap)
        throw CapExceeded("intersect: " + std::to_string(pairs) +
                          " candidate generators exceed cap " +
                          std::to_string(caps().generator_cap));
    std::vector<Monomial> out;
    out.reserve(pairs);
    for (const Monomial& u : a.generators())
        for (const Monomial& v : b.generators())
            out.push_back(lcm(u, v));
    return MonomialIdeal(a.nvars(), std::move(out));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mixed ambient sizes");
    if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.nvars());
    std::size_t pairs = a.generators().size() * b.generators().size();
    if (pairs > caps().generator_cap)
        throw CapExceeded("product: " + std::to_string(pairs) +
                          " candidate generators exceed cap " +
                          std::to_string(caps().generator_cap));
    std::vector<Monomial> out;
    out.reserve(pairs);
    for (const Monomial& u : a.generators())
        for (const Monomial& v : b.generators())
            out.push_back(u * v);
    return MonomialIdeal(a.nvars(), std::move(out));
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    MonomialIdeal r = MonomialIdeal::unit(a.nvars());
    for (int i = 0; i < k; ++i) r = product(r, a);
    return r;
}

MonomialIdeal colon(const MonomialIdeal& i, const Monomial& m) {
    if (i.nvars() != m.nvars()) throw std::invalid_argument("mixed ambient sizes");
    std::vector<Monomial> out;
    out.reserve(i.generators().size());
    for (const Monomial& g : i.generators()) out.push_back(g.quotient_by_gcd(m));
    return MonomialIdeal(i.nvars(), std::move(out));
}

MonomialIdeal restrict_away(const MonomialIdeal& i, int v) {
    if (v < 0 || v >= i.nvars()) throw std::invalid_argument("variable index out of range");
    std::vector<Monomial> out;
    for (const Monomial& g : i.generators())
        if (g.exponent(v) == 0) out.push_back(g.drop_var(v));
    return MonomialIdeal(i.nvars() - 1, std::move(out));
}

MonomialIdeal embed(const MonomialIdeal& i, const std::vector<int>& var_positions, int ambient) {
    if (static_cast<int>(var_positions.size()) != i.nvars())
        throw std::invalid_argument("embed: position map size mismatch");
    std::vector<Monomial> out;
    out.reserve(i.generators().size());
    for (const Monomial& g : i.generators()) {
        std::vector<int> e(static_cast<std::size_t>(ambient), 0);
        for (int j = 0; j < i.nvars(); ++j) {
            int pos = var_positions[static_cast<std::size_t>(j)];
            if (pos < 0 || pos >= ambient) throw std::invalid_argument("embed: position out of range");
            e[static_cast<std::size_t>(pos)] = g.exponent(j);
        }
        out.emplace_back(std::move(e));
    }
    return MonomialIdeal(ambient, std::move(out));
}

}  // namespace coverreg
