#ifndef BETTIFORGE_MASK_HPP
#define BETTIFORGE_MASK_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace bf {

// A subset of the ground set {0,...,n-1}; doubles as a squarefree
// multidegree.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline Mask bit(int v) { return Mask{1} << v; }

inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline std::vector<int> mask_to_vertices(Mask m) {
    std::vector<int> out;
    while (m) {
        int v = std::countr_zero(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

// Position of bit v among the set bits of w (v must be in w).  Used to
// relabel a subset of the ground set onto a compact ground set.
inline int rank_in(Mask w, int v) {
    return popcount(w & (bit(v) - 1));
}

// Compress the bits of m (a subset of w) onto {0,...,|w|-1}.
inline Mask compress(Mask m, Mask w) {
    Mask out = 0;
    int pos = 0;
    while (w) {
        int v = std::countr_zero(w);
        if (m & bit(v)) out |= bit(pos);
        ++pos;
        w &= w - 1;
    }
    return out;
}

// Inverse of compress: spread the low |w| bits of m onto the positions of w.
inline Mask spread(Mask m, Mask w) {
    Mask out = 0;
    int pos = 0;
    while (w) {
        int v = std::countr_zero(w);
        if (m & bit(pos)) out |= bit(v);
        ++pos;
        w &= w - 1;
    }
    return out;
}

}  // namespace bf

#endif
