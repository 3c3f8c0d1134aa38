#include "bettiforge/simplicial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace bf {

SimplicialComplex restrict_complex(const SimplicialComplex& c, Mask w) {
    if ((w & ~full_mask(c.ground_size)) != 0)
        throw std::invalid_argument("restriction mask outside ground set");
    SimplicialComplex out;
    out.ground_size = popcount(w);
    for (Mask g : c.nonface_generators)
        if (subset(g, w)) out.nonface_generators.push_back(compress(g, w));
    std::sort(out.nonface_generators.begin(), out.nonface_generators.end());
    return out;
}

std::vector<Mask> faces_of_dim(const SimplicialComplex& c, int k) {
    if (k < -1 || k >= c.ground_size)
        throw std::invalid_argument("face dimension out of range");
    std::vector<Mask> out;
    if (k == -1) {
        if (!c.is_void()) out.push_back(0);
        return out;
    }
    const Mask all = full_mask(c.ground_size);
    for (Mask f = 0; f <= all; ++f) {
        if (popcount(f) == k + 1 && c.is_face(f)) out.push_back(f);
        if (f == all) break;
    }
    return out;
}

SparseMatrix boundary_matrix(const SimplicialComplex& c, int k) {
    if (k < 0 || k >= c.ground_size)
        throw std::invalid_argument("boundary index out of range");
    const std::vector<Mask> src = faces_of_dim(c, k);
    const std::vector<Mask> dst = faces_of_dim(c, k - 1);
    std::unordered_map<Mask, int> dst_index;
    for (int i = 0; i < static_cast<int>(dst.size()); ++i) dst_index[dst[i]] = i;

    SparseMatrix m;
    m.rows = static_cast<int>(dst.size());
    m.cols = static_cast<int>(src.size());
    for (int j = 0; j < static_cast<int>(src.size()); ++j) {
        Mask f = src[j];
        int sign = 1;
        Mask rest = f;
        while (rest) {
            const int v = std::countr_zero(rest);
            const Mask sub = f & ~bit(v);
            auto it = dst_index.find(sub);
            // every subface of a face is a face, so it must be present
            if (it == dst_index.end())
                throw std::logic_error("subface missing from chain basis");
            m.add(it->second, j, sign);
            sign = -sign;
            rest &= rest - 1;
        }
    }
    // For k = 0 the loop above already encodes the reduced convention:
    // the single subface of {v} is the empty face, coefficient +1.
    return m;
}

std::vector<int> reduced_homology_dims(const SimplicialComplex& c,
                                       const FieldSpec& f) {
    std::vector<int> dims(c.ground_size + 1, 0);  // index k+1
    if (c.is_void()) return dims;

    std::vector<int> face_count(c.ground_size + 1, 0);
    face_count[0] = 1;  // the empty face
    if (c.ground_size > 0) {
        const Mask all = full_mask(c.ground_size);
        for (Mask m = 1;; ++m) {
            if (c.is_face(m)) ++face_count[popcount(m)];
            if (m >= all) break;
        }
    }

    // rank of d_k for k = 0 .. ground_size-1, stored at index k
    std::vector<int> rk(c.ground_size + 1, 0);
    for (int k = 0; k < c.ground_size; ++k) {
        if (face_count[k + 1] == 0) break;
        rk[k] = rank(boundary_matrix(c, k), f);
    }
    for (int k = -1; k < c.ground_size; ++k) {
        const int upper = (k + 1 < c.ground_size) ? rk[k + 1] : 0;
        const int lower = (k >= 0) ? rk[k] : 0;
        dims[k + 1] = face_count[k + 1] - lower - upper;
    }
    return dims;
}

}  // namespace bf
