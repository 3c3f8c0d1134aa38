#include "bettiforge/ideals.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bf {

std::vector<Mask> minimalize(std::vector<Mask> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Mask> out;
    for (Mask g : gens) {
        bool redundant = false;
        for (Mask kept : out)
            if (subset(kept, g)) { redundant = true; break; }
        if (!redundant) out.push_back(g);
    }
    // a proper subset is numerically smaller, so one ascending pass suffices
    return out;
}

SquarefreeIdeal make_ideal(int ground_size, std::vector<Mask> gens) {
    SquarefreeIdeal out;
    out.ground_size = ground_size;
    for (Mask g : gens) {
        if (g == 0) throw std::invalid_argument("empty generator");
        if ((g & ~full_mask(ground_size)) != 0)
            throw std::invalid_argument("generator outside ground set");
    }
    out.generators = minimalize(std::move(gens));
    return out;
}

SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& i) {
    return SimplicialComplex{i.ground_size, i.generators};
}

SquarefreeIdeal ideal_of_complex(const SimplicialComplex& c) {
    return make_ideal(c.ground_size, c.nonface_generators);
}

SquarefreeIdeal colon_by_monomial(const SquarefreeIdeal& i, Mask m) {
    if (m == 0) throw std::invalid_argument("colon by the empty monomial");
    std::vector<Mask> gens;
    for (Mask g : i.generators) {
        const Mask q = g & ~m;
        if (q == 0)
            throw std::domain_error(
                "colon is the unit ideal (a generator divides the monomial)");
        gens.push_back(q);
    }
    return make_ideal(i.ground_size, std::move(gens));
}

SquarefreeIdeal sum(const SquarefreeIdeal& i, const SquarefreeIdeal& j) {
    if (i.ground_size != j.ground_size)
        throw std::invalid_argument("sum requires a common ground set");
    std::vector<Mask> gens = i.generators;
    gens.insert(gens.end(), j.generators.begin(), j.generators.end());
    return make_ideal(i.ground_size, std::move(gens));
}

bool supports_disjoint(const SquarefreeIdeal& i, const SquarefreeIdeal& j) {
    Mask a = 0, b = 0;
    for (Mask g : i.generators) a |= g;
    for (Mask g : j.generators) b |= g;
    return (a & b) == 0;
}

SquarefreeIdeal parse_ideal(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Mask> gens;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0 || n > 31)
                throw std::runtime_error("line 1: expected ground size 0..31");
            continue;
        }
        Mask g = 0;
        int v;
        bool any = false;
        while (ls >> v) {
            if (v < 0 || v >= n)
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": variable index out of range");
            g |= bit(v);
            any = true;
        }
        if (any) gens.push_back(g);
    }
    if (n < 0) throw std::runtime_error("empty ideal file");
    return make_ideal(n, std::move(gens));
}

std::string format_ideal(const SquarefreeIdeal& i) {
    std::ostringstream out;
    out << i.ground_size << "\n";
    for (Mask g : i.generators) {
        bool first = true;
        for (int v : mask_to_vertices(g)) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace bf
