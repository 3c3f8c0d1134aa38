#ifndef BETTIFORGE_SIMPLICIAL_HPP
#define BETTIFORGE_SIMPLICIAL_HPP

#include <vector>

#include "bettiforge/exactla.hpp"
#include "bettiforge/mask.hpp"

namespace bf {

// A simplicial complex presented by its minimal non-faces: F is a face
// iff no generator is contained in F.  An empty generator makes the
// complex void (no faces at all); with no generators it is the full
// simplex.
struct SimplicialComplex {
    int ground_size = 0;
    std::vector<Mask> nonface_generators;  // antichain, ascending order

    bool is_face(Mask f) const {
        for (Mask g : nonface_generators)
            if (subset(g, f)) return false;
        return true;
    }
    bool is_void() const { return !is_face(0); }
};

// Induced subcomplex on w, relabeled to a compact ground set.
SimplicialComplex restrict_complex(const SimplicialComplex& c, Mask w);

// All faces with k+1 vertices, ascending bitmask order.  k = -1 yields
// the empty face iff the complex is non-void.
std::vector<Mask> faces_of_dim(const SimplicialComplex& c, int k);

// Signed incidence matrix of the reduced boundary map d_k : C_k -> C_{k-1},
// 0 <= k < ground_size, in the face orders of faces_of_dim.  d_0 sends
// every vertex to the empty face with coefficient +1.
SparseMatrix boundary_matrix(const SimplicialComplex& c, int k);

// Reduced homology dimensions over f, indexed by k+1 for
// k = -1 .. ground_size-1.  The void complex returns all zeros; the
// irrelevant complex {emptyset} has H~_{-1} of dimension 1.
std::vector<int> reduced_homology_dims(const SimplicialComplex& c,
                                       const FieldSpec& f);

}  // namespace bf

#endif
