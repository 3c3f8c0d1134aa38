#ifndef BETTIFORGE_IDEALS_HPP
#define BETTIFORGE_IDEALS_HPP

#include <string>
#include <vector>

#include "bettiforge/mask.hpp"
#include "bettiforge/simplicial.hpp"

namespace bf {

// A squarefree monomial ideal given by its minimal generators, each a
// non-empty subset of the ground set.  Generators form an antichain and
// are kept in ascending bitmask order.
struct SquarefreeIdeal {
    int ground_size = 0;
    std::vector<Mask> generators;

    bool is_zero() const { return generators.empty(); }
    // monomial membership: x_m is in the ideal iff some generator divides it
    bool contains_monomial(Mask m) const {
        for (Mask g : generators)
            if (subset(g, m)) return true;
        return false;
    }
};

// Drop non-minimal masks and sort ascending.
std::vector<Mask> minimalize(std::vector<Mask> gens);

// Build an ideal from raw generators (minimalized).  Throws if a
// generator is empty or out of the ground set.
SquarefreeIdeal make_ideal(int ground_size, std::vector<Mask> gens);

// The Stanley-Reisner complex: F is a face iff x_F is not in the ideal.
SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& i);

// Recover the ideal from a complex (non-faces become generators).
SquarefreeIdeal ideal_of_complex(const SimplicialComplex& c);

// (I : x_m) for a non-empty squarefree monomial m: divide m out of each
// generator and re-minimalize.  Throws if some generator divides x_m
// (the colon would be the unit ideal, which this type cannot hold).
SquarefreeIdeal colon_by_monomial(const SquarefreeIdeal& i, Mask m);

// I + J on a common ground set.
SquarefreeIdeal sum(const SquarefreeIdeal& i, const SquarefreeIdeal& j);

// True iff the variables appearing in i and j are disjoint.
bool supports_disjoint(const SquarefreeIdeal& i, const SquarefreeIdeal& j);

// Text format: first line n, then one generator per line as
// space-separated variable indices.
SquarefreeIdeal parse_ideal(const std::string& text);
std::string format_ideal(const SquarefreeIdeal& i);

}  // namespace bf

#endif
