#include "coverreg/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "coverreg/caps.hpp"

namespace coverreg {

SimplicialComplexView::SimplicialComplexView(std::vector<int> ground,
                                             std::vector<std::uint32_t> face_masks)
    : ground_(std::move(ground)), faces_(std::move(face_masks)) {
    if (static_cast<int>(ground_.size()) > caps().koszul_ground_cap || ground_.size() > 16)
        throw CapExceeded("simplicial complex: ground set of " +
                          std::to_string(ground_.size()) + " exceeds cap");
    if (!std::is_sorted(ground_.begin(), ground_.end()) ||
        std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end())
        throw std::invalid_argument("simplicial complex: ground set must be sorted and distinct");
    std::uint32_t all = ground_.empty() ? 0u : ((1u << ground_.size()) - 1);
    std::sort(faces_.begin(), faces_.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    for (std::uint32_t face : faces_) {
        if ((face & ~all) != 0)
            throw std::invalid_argument("simplicial complex: face outside the ground set");
        for (std::uint32_t t = face; t != 0; t &= t - 1)
            if (!has_face(face & ~(t & ~(t - 1))))
                throw std::invalid_argument("simplicial complex: family not closed under subsets");
    }
}

bool SimplicialComplexView::has_face(std::uint32_t mask) const {
    auto by_size_then_value = [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    };
    return std::binary_search(faces_.begin(), faces_.end(), mask, by_size_then_value);
}

int SimplicialComplexView::dim() const {
    if (faces_.empty()) return -2;
    return std::popcount(faces_.back()) - 1;
}

long long SimplicialComplexView::reduced_euler_characteristic() const {
    long long sum = 0;
    for (std::uint32_t face : faces_)
        sum += (std::popcount(face) % 2 == 0) ? -1 : 1;
    return sum;
}

std::vector<std::pair<int, int>> reduced_homology_ranks(const SimplicialComplexView& c,
                                                        const FieldTag& f) {
    std::vector<std::vector<std::vector<int>>> faces_by_size;
    for (std::uint32_t face : c.faces()) {
        std::size_t s = static_cast<std::size_t>(std::popcount(face));
        if (faces_by_size.size() <= s) faces_by_size.resize(s + 1);
        std::vector<int> members;
        for (std::uint32_t t = face; t != 0; t &= t - 1)
            members.push_back(std::countr_zero(t));
        faces_by_size[s].push_back(std::move(members));
    }
    std::vector<int> ranks = reduced_homology_by_size(faces_by_size, f);
    std::vector<std::pair<int, int>> out;
    for (std::size_t s = 0; s < ranks.size(); ++s)
        out.emplace_back(static_cast<int>(s) - 1, ranks[s]);
    return out;
}

std::vector<int> reduced_homology_by_size(
    const std::vector<std::vector<std::vector<int>>>& faces_by_size, const FieldTag& f) {
    std::size_t top = faces_by_size.size();
    while (top > 0 && faces_by_size[top - 1].empty()) --top;
    if (top == 0) return {};
    if (faces_by_size[0].size() != 1 || !faces_by_size[0][0].empty())
        throw std::invalid_argument("homology: nonempty complex must contain the empty face once");

    // Column index of every face within its size class.
    std::vector<std::map<std::vector<int>, int>> index(top);
    for (std::size_t s = 0; s < top; ++s)
        for (std::size_t c = 0; c < faces_by_size[s].size(); ++c)
            if (!index[s].emplace(faces_by_size[s][c], static_cast<int>(c)).second)
                throw std::invalid_argument("homology: duplicate face");

    // boundary_rank[s] = rank of the map from size-s faces to size-(s-1)
    // faces; boundary_rank[0] and the rank above the top are zero. Boundary
    // matrices have one column per face with only s nonzero entries, so
    // they are assembled and eliminated sparsely.
    std::vector<int> boundary_rank(top + 1, 0);
    for (std::size_t s = 1; s < top; ++s) {
        std::size_t rows = faces_by_size[s - 1].size(), cols = faces_by_size[s].size();
        if (cols == 0) continue;
        std::vector<std::vector<std::pair<int, int>>> columns(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            const std::vector<int>& face = faces_by_size[s][c];
            columns[c].reserve(face.size());
            int sign = 1;
            for (std::size_t drop = 0; drop < face.size(); ++drop) {
                std::vector<int> sub;
                sub.reserve(face.size() - 1);
                for (std::size_t t = 0; t < face.size(); ++t)
                    if (t != drop) sub.push_back(face[t]);
                auto hit = index[s - 1].find(sub);
                if (hit == index[s - 1].end())
                    throw std::invalid_argument("homology: family not closed under subsets");
                columns[c].emplace_back(hit->second, sign);
                sign = -sign;
            }
        }
        boundary_rank[s] = sparse_matrix_rank(rows, std::move(columns), f);
    }
    std::vector<int> ranks(top);
    for (std::size_t s = 0; s < top; ++s)
        ranks[s] = static_cast<int>(faces_by_size[s].size()) - boundary_rank[s] -
                   boundary_rank[s + 1];
    return ranks;
}

}  // namespace coverreg
