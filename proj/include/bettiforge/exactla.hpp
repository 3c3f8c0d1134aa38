#ifndef BETTIFORGE_EXACTLA_HPP
#define BETTIFORGE_EXACTLA_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bf {

// The coefficient field: characteristic 0 means exact rationals,
// otherwise a prime p < 2^31.
struct FieldSpec {
    std::uint32_t characteristic = 0;

    bool is_valid() const;
    bool operator==(const FieldSpec&) const = default;
};

// Sparse integer matrix; boundary maps are signed incidence matrices,
// so coefficients are -1/0/+1 at construction.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    struct Entry {
        int row;
        int col;
        int value;
    };
    std::vector<Entry> entries;

    void add(int r, int c, int v) { entries.push_back({r, c, v}); }
};

// Rank of m over the field f.  Characteristic 0 uses fraction-free
// (Bareiss) integer elimination; characteristic p uses modular
// arithmetic.  Never touches floating point.
int rank(const SparseMatrix& m, const FieldSpec& f);

}  // namespace bf

#endif
