#ifndef COVERREG_HOMOLOGY_HPP
#define COVERREG_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "coverreg/field.hpp"

namespace coverreg {

// An explicit simplicial complex on a ground set of at most 16 vertices.
// Faces are bitmasks over positions in the ground set, kept sorted by
// (cardinality, mask). The family must be closed under subsets. The void
// complex (no faces at all) and the irrelevant complex (only the empty
// face) are distinct values.
class SimplicialComplexView {
public:
    SimplicialComplexView(std::vector<int> ground, std::vector<std::uint32_t> face_masks);

    const std::vector<int>& ground() const { return ground_; }
    const std::vector<std::uint32_t>& faces() const { return faces_; }
    bool is_void() const { return faces_.empty(); }
    bool is_irrelevant() const { return faces_.size() == 1 && faces_[0] == 0; }
    bool has_face(std::uint32_t mask) const;

    // Dimension of the largest face; -1 for the irrelevant complex and -2
    // for the void complex.
    int dim() const;

    // Sum of (-1)^dim(F) over all faces, the empty face contributing -1.
    // Zero for the void complex.
    long long reduced_euler_characteristic() const;

private:
    std::vector<int> ground_;
    std::vector<std::uint32_t> faces_;
};

// Ranks of the reduced homology of `c` over `f`, as (dimension, rank) pairs
// for every dimension from -1 to dim(c); zero ranks are included. The void
// complex yields an empty list; the irrelevant complex has H~_{-1} of rank
// one and nothing else.
std::vector<std::pair<int, int>> reduced_homology_ranks(const SimplicialComplexView& c,
                                                        const FieldTag& f);

// Core homology engine for complexes too large for a 16-vertex ground set
// (order complexes of lattice intervals). faces_by_size[s] lists the faces
// with exactly s vertices, each as a strictly increasing vector of vertex
// ids; faces_by_size[0] is {{}} whenever the complex is nonempty. Returns
// ranks[s] = dim H~_{s-1}; an all-empty input (void complex) returns {}.
std::vector<int> reduced_homology_by_size(
    const std::vector<std::vector<std::vector<int>>>& faces_by_size, const FieldTag& f);

}  // namespace coverreg

#endif
