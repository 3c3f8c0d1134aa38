#include "bettiforge/betti.hpp"

#include <nlohmann/json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bf {

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Per-mask Hochster contribution: beta_{i,W} = dim H~_{|W|-i-1}(Delta[W]).
void hochster_for_mask(const SimplicialComplex& full, Mask w, const FieldSpec& f,
                       std::vector<std::tuple<int, Mask, long long>>& out) {
    const auto dims = reduced_homology_dims(restrict_complex(full, w), f);
    const int size = popcount(w);
    for (int i = 1; i <= size; ++i) {
        const int d = dims[size - i];  // H~_{|W|-i-1} lives at index |W|-i
        if (d > 0) out.emplace_back(i, w, d);
    }
}

BettiTable hochster_sweep(const SquarefreeIdeal& ideal, const FieldSpec& f,
                          bool parallel) {
    BettiTable table;
    table.ground_size = ideal.ground_size;
    table.field = f;
    table.add(0, 0, 1);
    const SimplicialComplex full = stanley_reisner_complex(ideal);
    const std::int64_t count = std::int64_t{1} << ideal.ground_size;

    if (!parallel) {
        std::vector<std::tuple<int, Mask, long long>> local;
        for (std::int64_t w = 1; w < count; ++w)
            hochster_for_mask(full, static_cast<Mask>(w), f, local);
        for (auto& [i, a, v] : local) table.add(i, a, v);
        return table;
    }

#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<std::tuple<int, Mask, long long>> local;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t w = 1; w < count; ++w)
            hochster_for_mask(full, static_cast<Mask>(w), f, local);
#pragma omp critical(bettiforge_hochster_merge)
        for (auto& [i, a, v] : local) table.add(i, a, v);
    }
#else
    std::vector<std::tuple<int, Mask, long long>> local;
    for (std::int64_t w = 1; w < count; ++w)
        hochster_for_mask(full, static_cast<Mask>(w), f, local);
    for (auto& [i, a, v] : local) table.add(i, a, v);
#endif
    return table;
}

}  // namespace

GradedBetti BettiTable::graded() const {
    GradedBetti out;
    for (const auto& [key, v] : entries) out[{key.first, popcount(key.second)}] += v;
    return out;
}

std::optional<int> BettiTable::t_shift(int i) const {
    std::optional<int> out;
    for (const auto& [key, v] : entries)
        if (key.first == i)
            out = std::max(out.value_or(0), popcount(key.second));
    return out;
}

int BettiTable::reg() const {
    int r = 0;
    for (const auto& [key, v] : entries)
        r = std::max(r, popcount(key.second) - key.first);
    return r;
}

int BettiTable::pdim() const {
    int p = 0;
    for (const auto& [key, v] : entries) p = std::max(p, key.first);
    return p;
}

BettiTable hochster_betti(const SquarefreeIdeal& i, const FieldSpec& f) {
    return hochster_sweep(i, f, /*parallel=*/true);
}

BettiTable hochster_betti_serial(const SquarefreeIdeal& i, const FieldSpec& f) {
    return hochster_sweep(i, f, /*parallel=*/false);
}

BettiTable koszul_oracle_betti(const SquarefreeIdeal& ideal, const FieldSpec& f) {
    if (ideal.ground_size > 6)
        throw std::invalid_argument("Koszul oracle is capped at 6 variables");
    BettiTable table;
    table.ground_size = ideal.ground_size;
    table.field = f;

    const Mask all = full_mask(ideal.ground_size);
    for (Mask a = 0;; ++a) {
        const int deg = popcount(a);
        // Koszul complex on all variables tensored with R/I, degree-a part:
        // basis of step i is {S <= a : |S| = i, a \ S not in I}
        std::vector<std::vector<Mask>> basis(deg + 1);
        std::vector<std::unordered_map<Mask, int>> index(deg + 1);
        Mask s = a;
        for (;;) {
            if (!ideal.contains_monomial(a & ~s)) {
                const int i = popcount(s);
                index[i][s] = static_cast<int>(basis[i].size());
                basis[i].push_back(s);
            }
            if (s == 0) break;
            s = (s - 1) & a;
        }
        auto differential = [&](int i) {
            SparseMatrix m;
            m.rows = i - 1 <= deg ? static_cast<int>(basis[i - 1].size()) : 0;
            m.cols = static_cast<int>(basis[i].size());
            for (int col = 0; col < m.cols; ++col) {
                const Mask src = basis[i][col];
                int sign = 1;
                Mask rest = src;
                while (rest) {
                    const int x = std::countr_zero(rest);
                    const Mask tgt = src & ~bit(x);
                    auto it = index[i - 1].find(tgt);
                    if (it != index[i - 1].end()) m.add(it->second, col, sign);
                    sign = -sign;
                    rest &= rest - 1;
                }
            }
            return m;
        };
        std::vector<int> rk(deg + 2, 0);
        for (int i = 1; i <= deg; ++i)
            if (!basis[i].empty() && !basis[i - 1].empty())
                rk[i] = rank(differential(i), f);
        for (int i = 0; i <= deg; ++i) {
            const long long beta = static_cast<long long>(basis[i].size()) -
                                   rk[i] - (i + 1 <= deg ? rk[i + 1] : 0);
            if (beta != 0) table.add(i, a, beta);
        }
        if (a == all) break;
    }
    return table;
}

BettiTable mapping_cone_betti(const Graph& g, int x, int y, const FieldSpec& f) {
    const SquarefreeIdeal colon = colon_edge_ideal(g, x, y);
    const BettiTable del = hochster_betti(edge_ideal(delete_edge(g, x, y)), f);
    const BettiTable col = hochster_betti(colon, f);
    BettiTable out;
    out.ground_size = g.n;
    out.field = f;
    const Mask e = bit(x) | bit(y);
    for (const auto& [key, v] : del.entries) out.add(key.first, key.second, v);
    for (const auto& [key, v] : col.entries)
        out.add(key.first + 1, key.second | e, v);
    return out;
}

BettiTable disjoint_sum_betti(const BettiTable& bI, const BettiTable& bJ) {
    if (bI.ground_size != bJ.ground_size)
        throw std::invalid_argument("tables must share a ground set");
    BettiTable out;
    out.ground_size = bI.ground_size;
    out.field = bI.field;
    for (const auto& [ki, vi] : bI.entries)
        for (const auto& [kj, vj] : bJ.entries) {
            if ((ki.second & kj.second) != 0)
                throw std::invalid_argument("supports are not disjoint");
            out.add(ki.first + kj.first, ki.second | kj.second, vi * vj);
        }
    return out;
}

GradedBetti cone_betti(const BettiTable& bH, const BettiTable& bStar) {
    GradedBetti out;
    out[{0, 0}] = 1;
    for (const auto& [key, v] : bH.graded()) {
        if (key.first < 1) continue;
        out[{key.first, key.second}] += v;
        out[{key.first + 1, key.second + 1}] += v;  // the shifted x*I(H) strand
    }
    for (const auto& [key, v] : bStar.graded()) {
        if (key.first < 1) continue;
        out[{key.first, key.second}] += v;
    }
    return out;
}

GradedBetti join_betti(const BettiTable& bG, int nG, const BettiTable& bH, int nH) {
    GradedBetti out;
    out[{0, 0}] = 1;
    for (const auto& [key, v] : bG.graded()) {
        if (key.first < 1) continue;
        for (int k = 0; k <= nH; ++k) {
            const long long c = binom(nH, k);
            if (c) out[{key.first + k, key.second + k}] += c * v;
        }
    }
    for (const auto& [key, v] : bH.graded()) {
        if (key.first < 1) continue;
        for (int k = 0; k <= nG; ++k) {
            const long long c = binom(nG, k);
            if (c) out[{key.first + k, key.second + k}] += c * v;
        }
    }
    // linear strand contribution of the subsets meeting both sides: a
    // disjoint union of two non-empty complexes picks up one extra
    // reduced 0-cycle
    for (int j = 2; j <= nG + nH; ++j) {
        const long long c = binom(nG + nH, j) - binom(nG, j) - binom(nH, j);
        if (c > 0) out[{j - 1, j}] += c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::string betti_to_json(const BettiTable& b, bool multigraded) {
    nlohmann::ordered_json j;
    j["n"] = b.ground_size;
    j["field_char"] = b.field.characteristic;
    if (multigraded) {
        j["multigraded"] = nlohmann::json::array();
        for (const auto& [key, v] : b.entries)
            j["multigraded"].push_back({{"i", key.first},
                                        {"mask", mask_to_vertices(key.second)},
                                        {"beta", v}});
    }
    j["graded"] = nlohmann::json::array();
    for (const auto& [key, v] : b.graded())
        j["graded"].push_back({{"i", key.first}, {"j", key.second}, {"beta", v}});
    j["t"] = nlohmann::json::array();
    for (int i = 0; i <= b.pdim(); ++i) {
        auto t = b.t_shift(i);
        if (t)
            j["t"].push_back(*t);
        else
            j["t"].push_back(nullptr);
    }
    j["reg"] = b.reg();
    j["pdim"] = b.pdim();
    return j.dump(2) + "\n";
}

std::string betti_diagram(const BettiTable& b) {
    const GradedBetti g = b.graded();
    const int p = b.pdim();
    const int r = b.reg();
    std::ostringstream out;
    out << "    ";
    for (int i = 0; i <= p; ++i) out << ' ' << i << "    ";
    out << "\n";
    for (int row = 0; row <= r; ++row) {
        out << row << ":  ";
        for (int i = 0; i <= p; ++i) {
            auto it = g.find({i, i + row});
            std::string cell = (it == g.end() || it->second == 0)
                                   ? "."
                                   : std::to_string(it->second);
            out << ' ' << cell;
            for (std::size_t pad = cell.size(); pad < 5; ++pad) out << ' ';
        }
        out << "\n";
    }
    return out.str();
}

std::string betti_to_csv(const BettiTable& b, bool multigraded) {
    std::ostringstream out;
    if (multigraded) {
        out << "i,mask,beta\n";
        for (const auto& [key, v] : b.entries) {
            out << key.first << ',';
            bool first = true;
            for (int x : mask_to_vertices(key.second)) {
                if (!first) out << ' ';
                out << x;
                first = false;
            }
            out << ',' << v << "\n";
        }
    } else {
        out << "i,j,beta\n";
        for (const auto& [key, v] : b.graded())
            out << key.first << ',' << key.second << ',' << v << "\n";
    }
    return out.str();
}

}  // namespace bf
