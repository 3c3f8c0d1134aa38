#ifndef BETTIFORGE_ANALYSIS_HPP
#define BETTIFORGE_ANALYSIS_HPP

#include <string>
#include <vector>

#include "bettiforge/betti.hpp"

namespace bf {

// One j-strand of a graded Betti table: the set {i : beta_{i,i+j} != 0}.
struct Strand {
    int j = 0;
    int q = 0;  // min of present
    int p = 0;  // max of present
    std::vector<int> present;
    std::vector<int> gaps;  // [q, p] minus present
    bool connected = true;
};

// Strands for every j >= 1 with a nonempty present set.  The linear
// strand of an ideal sits at j = 1 for R/I; j = 0 is just (0, 0).
struct StrandReport {
    std::vector<Strand> strands;
    bool all_connected = true;

    const Strand* strand(int j) const {
        for (const auto& s : strands)
            if (s.j == j) return &s;
        return nullptr;
    }
};

StrandReport strand_report(const GradedBetti& g);
StrandReport strand_report(const BettiTable& b);

struct SubadditivityViolation {
    int a, b, t_a, t_b, t_ab;
};

struct SubadditivityReport {
    bool holds = true;
    std::vector<SubadditivityViolation> violations;
};

// t_{a+b} <= t_a + t_b for all a, b >= 1 with a + b <= pdim.
SubadditivityReport check_subadditivity(const BettiTable& b);

// For a sum I + J with I generated by k variables in support disjoint
// from J: each j-strand of the sum is the Minkowski dilation of J's
// j-strand by {0, ..., k}, so a connected strand [q, p] becomes
// [q, p + k].  Returns true iff bSum matches that prediction exactly.
bool check_linear_strand_extension(const BettiTable& bJ, int k,
                                   const BettiTable& bSum);

// Max multigraded entry over i >= 1 and its witnesses.
std::pair<long long, std::vector<std::pair<int, Mask>>> max_multigraded(
    const BettiTable& b);
bool check_multigraded_bound(const BettiTable& b, long long bound);

struct VerifyReport {
    struct Failure {
        std::string graph;   // edge-list text of the instance
        std::string detail;  // what went wrong, with a reproduction hint
    };
    std::string theorem;
    int n_max = 0;
    long long instances = 0;
    std::vector<Failure> failures;
    long long elapsed_ms = 0;

    bool ok() const { return failures.empty(); }
    std::string to_json() const;
};

// Exhaustive checks over the named statement's hypothesis class up to
// n_max vertices.  Known names: indsub, nug1, tb, subedge, greg,
// gprime_strand, strandvertex, strandjoin, uc_multigraded, cone_bound,
// jahangir_bound, fan_bound, kpartite_bound, rooted_tree.
VerifyReport verify_theorem(const std::string& name, int n_max,
                            const FieldSpec& f);
const std::vector<std::string>& known_theorems();

// Counterexample scan for the open questions; the report never claims a
// proof, only "no counterexample up to n_max".  Output is deterministic
// JSON (no timing fields).
std::string search_open_questions(int n_max, const FieldSpec& f);

}  // namespace bf

#endif
