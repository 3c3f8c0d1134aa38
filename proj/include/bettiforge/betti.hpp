#ifndef BETTIFORGE_BETTI_HPP
#define BETTIFORGE_BETTI_HPP

#include <map>
#include <optional>
#include <string>

#include "bettiforge/graphs.hpp"
#include "bettiforge/ideals.hpp"

namespace bf {

// Graded view of a Betti table: (homological index i, total degree j) -> count.
using GradedBetti = std::map<std::pair<int, int>, long long>;

// Multigraded Betti numbers of R/I for a squarefree monomial ideal I.
// Zero entries are never stored; absence means zero.
struct BettiTable {
    int ground_size = 0;
    FieldSpec field;
    std::map<std::pair<int, Mask>, long long> entries;

    long long at(int i, Mask a) const {
        auto it = entries.find({i, a});
        return it == entries.end() ? 0 : it->second;
    }
    void add(int i, Mask a, long long v) {
        if (v == 0) return;
        auto& slot = entries[{i, a}];
        slot += v;
        if (slot == 0) entries.erase({i, a});
    }

    GradedBetti graded() const;
    // max total degree in row i, absent when the row is empty
    std::optional<int> t_shift(int i) const;
    int reg() const;   // max |a| - i over entries
    int pdim() const;  // max i with a nonzero entry

    bool operator==(const BettiTable& o) const {
        return ground_size == o.ground_size && entries == o.entries;
    }
};

inline std::optional<int> graded_t_shift(const GradedBetti& b, int i) {
    std::optional<int> out;
    for (const auto& [key, v] : b)
        if (key.first == i && v != 0) out = std::max(out.value_or(key.second), key.second);
    return out;
}

// Hochster's formula over every subset of the ground set; the single
// source of truth for minimal Betti numbers.  The parallel version fans
// the per-mask homology computations out to OpenMP workers; the serial
// version is the reference implementation kept for testing.
BettiTable hochster_betti(const SquarefreeIdeal& i, const FieldSpec& f);
BettiTable hochster_betti_serial(const SquarefreeIdeal& i, const FieldSpec& f);

// Independent oracle: homology of the Koszul complex on all variables
// tensored with R/I, multidegree by multidegree.  Deliberately naive and
// capped at 6 variables; shares no code with the simplicial path.
BettiTable koszul_oracle_betti(const SquarefreeIdeal& i, const FieldSpec& f);

// beta_{i,a}(G) = beta_{i,a}(G\e) + beta_{i-1,a-e}(I(G\e):xy), for an
// edge e = {x,y} with N(x) <= N[y].
BettiTable mapping_cone_betti(const Graph& g, int x, int y, const FieldSpec& f);

// Tensor-product convolution for ideals with disjoint supports.
BettiTable disjoint_sum_betti(const BettiTable& bI, const BettiTable& bJ);

// Graded cone formula for G = x *_U H with U a vertex cover of H:
// beta_{i,j}(G) = beta_{i,j}(H) + beta_{i-1,j-1}(H) + beta_{i,j}(H'),
// where H' is the star on {x} and U and the middle term ranges over the
// rows i-1 >= 1 of H.
GradedBetti cone_betti(const BettiTable& bH, const BettiTable& bStar);

// Graded join formula, including the linear-strand cross term counting
// the subsets that meet both sides.
GradedBetti join_betti(const BettiTable& bG, int nG, const BettiTable& bH, int nH);

// JSON and text-diagram output (schema documented in the README).
std::string betti_to_json(const BettiTable& b, bool multigraded);
std::string betti_diagram(const BettiTable& b);
std::string betti_to_csv(const BettiTable& b, bool multigraded);

}  // namespace bf

#endif
