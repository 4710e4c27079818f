#include "coverreg/field.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace coverreg {

namespace mp = boost::multiprecision;

FieldTag FieldTag::gfp(int p) {
    if (p < 2 || p > 1000) throw std::invalid_argument("gfp: prime in [2, 1000] required");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("gfp: " + std::to_string(p) + " is not prime");
    return p == 2 ? gf2() : FieldTag(Kind::gfp, p);
}

FieldTag FieldTag::parse(const std::string& text) {
    if (text == "gf2") return gf2();
    if (text == "rational" || text == "q") return rational();
    if (text.size() > 2 && text.rfind("gf", 0) == 0 &&
        text.find_first_not_of("0123456789", 2) == std::string::npos && text.size() <= 6)
        return gfp(std::stoi(text.substr(2)));
    throw std::invalid_argument("unknown field '" + text + "' (use gf2, rational, or gf<p>)");
}

std::string FieldTag::str() const {
    switch (kind_) {
        case Kind::gf2: return "gf2";
        case Kind::rational: return "rational";
        case Kind::gfp: return "gf" + std::to_string(p_);
    }
    return "gf2";
}

namespace {

int rank_gf2(const std::vector<std::vector<int>>& m) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> basis;  // reduced pivot rows
    std::vector<std::size_t> pivots;
    int rank = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<std::uint64_t> row(words, 0);
        for (std::size_t c = 0; c < cols; ++c)
            if (m[r][c] & 1) row[c / 64] ^= (1ull << (c % 64));
        for (std::size_t b = 0; b < basis.size(); ++b)
            if ((row[pivots[b] / 64] >> (pivots[b] % 64)) & 1u)
                for (std::size_t w = 0; w < words; ++w) row[w] ^= basis[b][w];
        std::size_t pivot = cols;
        for (std::size_t c = 0; c < cols && pivot == cols; ++c)
            if ((row[c / 64] >> (c % 64)) & 1u) pivot = c;
        if (pivot == cols) continue;
        basis.push_back(std::move(row));
        pivots.push_back(pivot);
        ++rank;
    }
    return rank;
}

int rank_gfp(std::vector<std::vector<int>> m, int p) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a[r][c] = ((m[r][c] % p) + p) % p;
    auto inverse_mod = [&](std::int64_t x) {
        std::int64_t result = 1, base = x % p, e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };
    int rank = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows && pivot == rows; ++r)
            if (a[r][c] != 0) pivot = r;
        if (pivot == rows) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[pivot]);
        std::int64_t inv = inverse_mod(a[static_cast<std::size_t>(rank)][c]);
        for (std::size_t j = c; j < cols; ++j)
            a[static_cast<std::size_t>(rank)][j] = a[static_cast<std::size_t>(rank)][j] * inv % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
            std::int64_t factor = a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[r][j] = ((a[r][j] - factor * a[static_cast<std::size_t>(rank)][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// Bareiss fraction-free elimination: every division is exact, so the rank
// over the rationals of an integer matrix is computed without fractions.
int rank_rational(const std::vector<std::vector<int>>& m) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<std::vector<mp::cpp_int>> a(rows, std::vector<mp::cpp_int>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m[r][c];
    int rank = 0;
    mp::cpp_int prev = 1;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t k = static_cast<std::size_t>(rank);
        std::size_t pivot = rows;
        for (std::size_t r = k; r < rows && pivot == rows; ++r)
            if (a[r][c] != 0) pivot = r;
        if (pivot == rows) continue;
        std::swap(a[k], a[pivot]);
        for (std::size_t r = k + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[r][j] = (a[k][c] * a[r][j] - a[r][c] * a[k][j]) / prev;
            a[r][c] = 0;
        }
        prev = a[k][c];
        ++rank;
    }
    return rank;
}

// Sparse rank works column by column in the style of boundary-matrix
// reduction: a column's largest remaining row (its "low") is cancelled
// against the stored pivot column owning that row until the column either
// claims a fresh low (a new pivot, rank + 1) or empties. The count of
// surviving columns is the rank regardless of the order columns arrive in.

using SparseInput = std::vector<std::vector<std::pair<int, long long>>>;

int sparse_rank_gf2(const SparseInput& columns) {
    std::vector<std::vector<int>> stored;       // pivot columns: sorted odd rows
    std::unordered_map<int, int> pivot_at_row;  // low row -> index into stored
    int rank = 0;
    std::vector<int> col, merged;
    for (const auto& source : columns) {
        col.clear();
        for (auto [row, coeff] : source)
            if (coeff & 1) col.push_back(row);
        while (!col.empty()) {
            auto hit = pivot_at_row.find(col.back());
            if (hit == pivot_at_row.end()) {
                pivot_at_row.emplace(col.back(), static_cast<int>(stored.size()));
                stored.push_back(col);
                ++rank;
                break;
            }
            const std::vector<int>& pivot = stored[static_cast<std::size_t>(hit->second)];
            merged.clear();
            std::set_symmetric_difference(col.begin(), col.end(), pivot.begin(), pivot.end(),
                                          std::back_inserter(merged));
            col.swap(merged);
        }
    }
    return rank;
}

int sparse_rank_gfp(const SparseInput& columns, int p) {
    auto inverse_mod = [p](std::int64_t x) {
        std::int64_t result = 1, base = x % p, e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };
    using Entry = std::pair<int, std::int64_t>;
    std::vector<std::vector<Entry>> stored;
    std::unordered_map<int, int> pivot_at_row;
    int rank = 0;
    std::vector<Entry> col, merged;
    for (const auto& source : columns) {
        col.clear();
        for (auto [row, coeff] : source) {
            std::int64_t value = ((coeff % p) + p) % p;
            if (value != 0) col.emplace_back(row, value);
        }
        while (!col.empty()) {
            auto hit = pivot_at_row.find(col.back().first);
            if (hit == pivot_at_row.end()) {
                pivot_at_row.emplace(col.back().first, static_cast<int>(stored.size()));
                stored.push_back(col);
                ++rank;
                break;
            }
            const std::vector<Entry>& pivot = stored[static_cast<std::size_t>(hit->second)];
            std::int64_t factor = col.back().second * inverse_mod(pivot.back().second) % p;
            merged.clear();
            std::size_t s = 0, t = 0;
            while (s < col.size() || t < pivot.size()) {
                if (t == pivot.size() || (s < col.size() && col[s].first < pivot[t].first)) {
                    merged.push_back(col[s++]);
                } else if (s == col.size() || pivot[t].first < col[s].first) {
                    std::int64_t value = (p - factor * pivot[t].second % p) % p;
                    if (value != 0) merged.emplace_back(pivot[t].first, value);
                    ++t;
                } else {
                    std::int64_t value =
                        ((col[s].second - factor * pivot[t].second) % p + p) % p;
                    if (value != 0) merged.emplace_back(col[s].first, value);
                    ++s, ++t;
                }
            }
            col.swap(merged);
        }
    }
    return rank;
}

int sparse_rank_rational(const SparseInput& columns) {
    using Entry = std::pair<int, mp::cpp_int>;
    std::vector<std::vector<Entry>> stored;
    std::unordered_map<int, int> pivot_at_row;
    // Dividing out the column's content after every combination keeps
    // entries near +/-1 on boundary matrices, which is what makes exact
    // rational rank tractable at this scale.
    auto strip_content = [](std::vector<Entry>& col) {
        mp::cpp_int g = 0;
        for (const Entry& e : col) {
            g = mp::gcd(g, e.second);
            if (g == 1) return;
        }
        for (Entry& e : col) e.second /= g;
    };
    int rank = 0;
    std::vector<Entry> col, merged;
    for (const auto& source : columns) {
        col.clear();
        for (auto [row, coeff] : source) col.emplace_back(row, coeff);
        strip_content(col);
        while (!col.empty()) {
            auto hit = pivot_at_row.find(col.back().first);
            if (hit == pivot_at_row.end()) {
                pivot_at_row.emplace(col.back().first, static_cast<int>(stored.size()));
                stored.push_back(col);
                ++rank;
                break;
            }
            const std::vector<Entry>& pivot = stored[static_cast<std::size_t>(hit->second)];
            // col' = (b/g)·col − (a/g)·pivot cancels the shared low exactly.
            const mp::cpp_int& a = col.back().second;
            const mp::cpp_int& b = pivot.back().second;
            mp::cpp_int g = mp::gcd(a, b);
            mp::cpp_int ca = b / g, cb = a / g;
            merged.clear();
            std::size_t s = 0, t = 0;
            while (s < col.size() || t < pivot.size()) {
                if (t == pivot.size() || (s < col.size() && col[s].first < pivot[t].first)) {
                    merged.emplace_back(col[s].first, ca * col[s].second);
                    ++s;
                } else if (s == col.size() || pivot[t].first < col[s].first) {
                    merged.emplace_back(pivot[t].first, -cb * pivot[t].second);
                    ++t;
                } else {
                    mp::cpp_int value = ca * col[s].second - cb * pivot[t].second;
                    if (value != 0) merged.emplace_back(col[s].first, std::move(value));
                    ++s, ++t;
                }
            }
            col.swap(merged);
            strip_content(col);
        }
    }
    return rank;
}

}  // namespace

int matrix_rank(std::vector<std::vector<int>> m, const FieldTag& f) {
    for (const std::vector<int>& row : m)
        if (row.size() != m[0].size()) throw std::invalid_argument("ragged matrix");
    switch (f.kind()) {
        case FieldTag::Kind::gf2: return rank_gf2(m);
        case FieldTag::Kind::gfp: return rank_gfp(std::move(m), f.prime());
        case FieldTag::Kind::rational: return rank_rational(m);
    }
    return 0;
}

int sparse_matrix_rank(std::size_t rows,
                       std::vector<std::vector<std::pair<int, int>>> columns,
                       const FieldTag& f) {
    SparseInput canon(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        std::vector<std::pair<int, int>>& source = columns[c];
        std::sort(source.begin(), source.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<std::pair<int, long long>>& out = canon[c];
        out.reserve(source.size());
        for (auto [row, coeff] : source) {
            if (row < 0 || static_cast<std::size_t>(row) >= rows)
                throw std::invalid_argument("sparse rank: row index out of range");
            if (!out.empty() && out.back().first == row) out.back().second += coeff;
            else out.emplace_back(row, coeff);
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const auto& e) { return e.second == 0; }),
                  out.end());
    }
    switch (f.kind()) {
        case FieldTag::Kind::gf2: return sparse_rank_gf2(canon);
        case FieldTag::Kind::gfp: return sparse_rank_gfp(canon, f.prime());
        case FieldTag::Kind::rational: return sparse_rank_rational(canon);
    }
    return 0;
}

}  // namespace coverreg
