#include "coverreg/caps.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

namespace coverreg {

namespace {

// Parses "key=value,key=value" overrides from the COVERREG_CAPS environment
// variable, e.g. COVERREG_CAPS="generator_cap=500000,lattice_cap=200000".
Caps initial_caps() {
    Caps c;
    const char* env = std::getenv("COVERREG_CAPS");
    if (!env) return c;
    std::istringstream in(env);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        long long value = 0;
        try {
            value = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            continue;
        }
        if (value <= 0) continue;
        if (key == "generator_cap") c.generator_cap = static_cast<std::size_t>(value);
        else if (key == "lattice_cap") c.lattice_cap = static_cast<std::size_t>(value);
        else if (key == "transversal_var_cap") c.transversal_var_cap = static_cast<int>(value);
        else if (key == "koszul_ground_cap") c.koszul_ground_cap = static_cast<int>(value);
    }
    return c;
}

}  // namespace

Caps& caps() {
    static Caps instance = initial_caps();
    return instance;
}

}  // namespace coverreg
