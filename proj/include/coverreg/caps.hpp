#ifndef COVERREG_CAPS_HPP
#define COVERREG_CAPS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coverreg {

// Thrown when an intermediate object outgrows the configured caps.
// Desk-scale inputs never hit these; pathological ones abort loudly
// instead of thrashing.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct Caps {
    std::size_t generator_cap = 200000;  // intermediate generators in intersect/product
    std::size_t lattice_cap = 100000;    // lcm-lattice size
    int transversal_var_cap = 20;        // 2^n subset enumeration in minimal_primes
    int koszul_ground_cap = 16;          // simplicial ground-set size
};

// Process-wide caps. Set once at startup (the CLI honors COVERREG_CAPS);
// read-only afterwards.
Caps& caps();

}  // namespace coverreg

#endif
