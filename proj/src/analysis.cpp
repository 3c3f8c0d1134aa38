#include "bettiforge/analysis.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bf {

StrandReport strand_report(const GradedBetti& g) {
    std::map<int, std::set<int>> present;
    for (const auto& [key, v] : g) {
        const int i = key.first, j = key.second - key.first;
        if (j >= 1 && v != 0) present[j].insert(i);
    }
    StrandReport out;
    for (const auto& [j, is] : present) {
        Strand s;
        s.j = j;
        s.present.assign(is.begin(), is.end());
        s.q = s.present.front();
        s.p = s.present.back();
        for (int i = s.q; i <= s.p; ++i)
            if (!is.count(i)) s.gaps.push_back(i);
        s.connected = s.gaps.empty();
        if (!s.connected) out.all_connected = false;
        out.strands.push_back(std::move(s));
    }
    return out;
}

StrandReport strand_report(const BettiTable& b) { return strand_report(b.graded()); }

SubadditivityReport check_subadditivity(const BettiTable& b) {
    SubadditivityReport out;
    const int p = b.pdim();
    std::vector<std::optional<int>> t(p + 1);
    for (int i = 0; i <= p; ++i) t[i] = b.t_shift(i);
    for (int a = 1; a <= p; ++a)
        for (int bb = a; a + bb <= p; ++bb) {
            if (!t[a] || !t[bb] || !t[a + bb]) continue;
            if (*t[a + bb] > *t[a] + *t[bb]) {
                out.holds = false;
                out.violations.push_back({a, bb, *t[a], *t[bb], *t[a + bb]});
            }
        }
    return out;
}

bool check_linear_strand_extension(const BettiTable& bJ, int k,
                                   const BettiTable& bSum) {
    const StrandReport rJ = strand_report(bJ);
    const StrandReport rS = strand_report(bSum);
    std::set<int> js;
    for (const auto& s : rJ.strands) js.insert(s.j);
    for (const auto& s : rS.strands) js.insert(s.j);
    for (int j : js) {
        std::set<int> expect;
        if (const Strand* s = rJ.strand(j))
            for (int i : s->present)
                for (int r = 0; r <= k; ++r) expect.insert(i + r);
        std::set<int> got;
        if (const Strand* s = rS.strand(j))
            got.insert(s->present.begin(), s->present.end());
        if (expect != got) return false;
    }
    return true;
}

std::pair<long long, std::vector<std::pair<int, Mask>>> max_multigraded(
    const BettiTable& b) {
    long long best = 0;
    std::vector<std::pair<int, Mask>> witnesses;
    for (const auto& [key, v] : b.entries) {
        if (key.first < 1) continue;
        if (v > best) {
            best = v;
            witnesses.clear();
        }
        if (v == best) witnesses.emplace_back(key.first, key.second);
    }
    return {best, witnesses};
}

bool check_multigraded_bound(const BettiTable& b, long long bound) {
    return max_multigraded(b).first <= bound;
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["theorem"] = theorem;
    j["n_max"] = n_max;
    j["instances"] = instances;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : failures)
        j["failures"].push_back({{"graph", f.graph}, {"detail", f.detail}});
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2) + "\n";
}

namespace {

std::vector<Graph> graphs_up_to(int n_max, const EnumOptions& opt) {
    std::vector<Graph> out;
    for (int n = 1; n <= n_max; ++n) {
        auto batch = enumerate_graphs(n, opt);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

// True iff every vertex is within distance dist of the mask.
bool all_within_distance(const Graph& g, Mask start, int dist) {
    Mask reach = start;
    for (int step = 0; step < dist; ++step) {
        Mask next = reach;
        for (int v = 0; v < g.n; ++v)
            if (reach & bit(v)) next |= g.adj[v];
        reach = next;
    }
    return reach == full_mask(g.n);
}

using Checker = std::function<void(int, const FieldSpec&, VerifyReport&)>;

void fail(VerifyReport& r, const Graph& g, std::string detail) {
    r.failures.push_back({format_graph(g), std::move(detail)});
}

// t_{a+b} <= t_a + t_b for all a >= 1 and b in [b_lo, b_hi], a+b <= pdim.
void check_shift_bound(const Graph& g, const BettiTable& t, int b_lo, int b_hi,
                       VerifyReport& r) {
    const int p = t.pdim();
    for (int b = b_lo; b <= b_hi; ++b)
        for (int a = 1; a + b <= p; ++a) {
            auto ta = t.t_shift(a), tb = t.t_shift(b), tab = t.t_shift(a + b);
            if (!ta || !tb || !tab) continue;
            if (*tab > *ta + *tb) {
                std::ostringstream d;
                d << "t_" << a + b << "=" << *tab << " > t_" << a << "+t_" << b
                  << "=" << *ta + *tb;
                fail(r, g, d.str());
            }
        }
}

void verify_indsub(int n_max, const FieldSpec& f, VerifyReport& r) {
    for (const Graph& g : graphs_up_to(n_max, {})) {
        if (g.is_trivial()) continue;
        ++r.instances;
        check_shift_bound(g, hochster_betti(edge_ideal(g), f), 1,
                          induced_matching_number(g), r);
    }
}

void verify_nug1(int n_max, const FieldSpec& f, VerifyReport& r) {
    for (const Graph& g : graphs_up_to(n_max, {})) {
        if (g.is_trivial()) continue;
        ++r.instances;
        const int b = induced_matching_number(g) + 1;
        check_shift_bound(g, hochster_betti(edge_ideal(g), f), b, b, r);
    }
}

void verify_tb(int n_max, const FieldSpec& f, VerifyReport& r) {
    EnumOptions opt;
    opt.connected_only = true;
    for (const Graph& g : graphs_up_to(n_max, opt)) {
        if (g.is_trivial() || g.n == 2) continue;  // skip K_2: a lone edge
        ++r.instances;
        const int nu = induced_matching_number(g);
        const auto t = hochster_betti(edge_ideal(g), f).t_shift(nu + 1);
        if (!t || *t != 2 * nu + 1) {
            std::ostringstream d;
            d << "t_{nu+1} with nu=" << nu << " is "
              << (t ? std::to_string(*t) : std::string("empty")) << ", expected "
              << 2 * nu + 1;
            fail(r, g, d.str());
        }
    }
}

void verify_subedge(int n_max, const FieldSpec& f, VerifyReport& r) {
    for (const Graph& g : graphs_up_to(n_max, {})) {
        if (!in_class_G(g)) continue;
        ++r.instances;
        const auto rep = check_subadditivity(hochster_betti(edge_ideal(g), f));
        for (const auto& v : rep.violations) {
            std::ostringstream d;
            d << "subadditivity fails: t_" << v.a + v.b << "=" << v.t_ab
              << " > t_" << v.a << "+t_" << v.b << "=" << v.t_a + v.t_b;
            fail(r, g, d.str());
        }
    }
}

void verify_greg(int n_max, const FieldSpec& f, VerifyReport& r) {
    for (const Graph& g : graphs_up_to(n_max, {})) {
        if (!in_class_Gprime(g)) continue;
        ++r.instances;
        const int reg = hochster_betti(edge_ideal(g), f).reg();
        const int nu = induced_matching_number(g);
        if (reg != nu) {
            std::ostringstream d;
            d << "reg=" << reg << " != nu=" << nu;
            fail(r, g, d.str());
        }
    }
}

void verify_gprime_strand(int n_max, const FieldSpec& f, VerifyReport& r) {
    for (const Graph& g : graphs_up_to(n_max, {})) {
        if (!in_class_Gprime(g)) continue;
        ++r.instances;
        const auto rep = strand_report(hochster_betti(edge_ideal(g), f));
        for (const auto& s : rep.strands)
            if (!s.connected) {
                std::ostringstream d;
                d << s.j << "-strand has gaps";
                fail(r, g, d.str());
            }
    }
}

void verify_strandvertex(int n_max, const FieldSpec& f, VerifyReport& r) {
    for (const Graph& h : graphs_up_to(n_max - 1, {})) {
        if (h.is_trivial()) continue;
        const auto repH = strand_report(hochster_betti(edge_ideal(h), f));
        for (Mask u = 1; u <= full_mask(h.n); ++u) {
            if (!is_vertex_cover(h, u)) continue;
            ++r.instances;
            const Graph g = cone_along(h, u);
            const auto repG = strand_report(hochster_betti(edge_ideal(g), f));
            for (const auto& s : repG.strands) {
                const Strand* sh = repH.strand(s.j);
                const bool h_ok = sh == nullptr || sh->connected;
                if (h_ok && !s.connected) {
                    std::ostringstream d;
                    d << s.j << "-strand disconnects after coning over cover "
                      << u;
                    fail(r, g, d.str());
                }
            }
        }
    }
}

void verify_strandjoin(int n_max, const FieldSpec& f, VerifyReport& r) {
    for (int nG = 1; 2 * nG <= n_max; ++nG) {
        const auto gs = enumerate_graphs(nG, {});
        for (int nH = nG; nG + nH <= n_max; ++nH) {
            const auto hs = nH == nG ? gs : enumerate_graphs(nH, {});
            for (const Graph& g : gs) {
                if (!strand_report(hochster_betti(edge_ideal(g), f)).all_connected)
                    continue;
                for (const Graph& h : hs) {
                    if (!strand_report(hochster_betti(edge_ideal(h), f))
                             .all_connected)
                        continue;
                    ++r.instances;
                    const Graph j = join_graphs(g, h);
                    const auto rep =
                        strand_report(hochster_betti(edge_ideal(j), f));
                    if (!rep.all_connected)
                        fail(r, j, "join of strand-connected graphs is not "
                                   "strand connected");
                }
            }
        }
    }
}

void verify_uc_multigraded(int n_max, const FieldSpec& f, VerifyReport& r) {
    EnumOptions opt;
    opt.unicyclic_only = true;
    for (const Graph& g : graphs_up_to(n_max, opt)) {
        ++r.instances;
        const BettiTable t = hochster_betti(edge_ideal(g), f);
        const auto [best, witnesses] = max_multigraded(t);
        const int m = g.girth_of_unicyclic();
        if (m % 3 != 0) {
            if (best > 1) {
                std::ostringstream d;
                d << "girth " << m << " not divisible by 3 but max multigraded "
                  << "entry is " << best;
                fail(r, g, d.str());
            }
            continue;
        }
        const int k = m / 3;
        if (best > 2) {
            std::ostringstream d;
            d << "girth " << m << " = 3*" << k << " but max multigraded entry "
              << "is " << best;
            fail(r, g, d.str());
            continue;
        }
        const Mask cyc = g.cycle_support_of_unicyclic();
        if (!all_within_distance(g, cyc, 2)) continue;
        // every vertex within distance 2 of the cycle: value 2 occurs
        // exactly at (2k, cycle support)
        bool exact_witness = false;
        if (best == 2)
            for (const auto& [i, a] : witnesses) {
                if (i == 2 * k && a == cyc) {
                    exact_witness = true;
                    continue;
                }
                std::ostringstream d;
                d << "value-2 witness at i=" << i << " differs from i=" << 2 * k
                  << ", mask=cycle support";
                fail(r, g, d.str());
            }
        if (!exact_witness) {
            std::ostringstream d;
            d << "expected entry (2k, cycle support) = 2 with k=" << k
              << ", found max " << best;
            fail(r, g, d.str());
        }
    }
}

void verify_cone_bound(int n_max, const FieldSpec& f, VerifyReport& r) {
    for (const Graph& h : graphs_up_to(n_max - 1, {})) {
        if (h.is_trivial()) continue;
        const BettiTable th = hochster_betti(edge_ideal(h), f);
        long long c = 0, d = 0;
        for (const auto& [key, v] : th.entries) {
            if (key.first < 1) continue;
            (popcount(key.second) == key.first + 1 ? c : d) =
                std::max(popcount(key.second) == key.first + 1 ? c : d, v);
        }
        for (Mask u = 1; u <= full_mask(h.n); ++u) {
            if (!is_vertex_cover(h, u)) continue;
            ++r.instances;
            const Graph g = cone_along(h, u);
            const BettiTable tg = hochster_betti(edge_ideal(g), f);
            for (const auto& [key, v] : tg.entries) {
                if (key.first < 1) continue;
                const bool linear = popcount(key.second) == key.first + 1;
                const long long bound = linear ? c + 1 : d;
                if (v > bound) {
                    std::ostringstream msg;
                    msg << "entry (" << key.first << ", |a|="
                        << popcount(key.second) << ") = " << v
                        << " exceeds bound " << bound << " for cover " << u;
                    fail(r, g, msg.str());
                }
            }
        }
    }
}

void check_bound_instance(const Graph& g, long long bound, const FieldSpec& f,
                          const std::string& what, VerifyReport& r) {
    ++r.instances;
    const auto [best, witnesses] = max_multigraded(hochster_betti(edge_ideal(g), f));
    if (best > bound) {
        std::ostringstream d;
        d << what << ": max multigraded entry " << best << " exceeds " << bound;
        fail(r, g, d.str());
    }
}

void verify_jahangir_bound(int n_max, const FieldSpec& f, VerifyReport& r) {
    // W_3 = K_4 is excluded: its top multigraded entry is 3 (it is the
    // complete 4-partite case, bound k-1 = 3), the one place where the
    // cycle's value-2 entry lands on the linear strand.
    for (int n = 4; n + 1 <= n_max; ++n)
        check_bound_instance(wheel_graph(n), 2, f,
                             "wheel:" + std::to_string(n), r);
    for (int n = 2; 2 * n + 1 <= n_max; ++n)
        check_bound_instance(jahangir_graph(n), 2, f,
                             "jahangir:" + std::to_string(n), r);
}

void verify_fan_bound(int n_max, const FieldSpec& f, VerifyReport& r) {
    for (int m = 1; m < n_max; ++m)
        for (int n = 2; m + n <= n_max; ++n)
            check_bound_instance(
                fan_graph(m, n), 2, f,
                "fan:" + std::to_string(m) + "," + std::to_string(n), r);
}

void verify_kpartite_bound(int n_max, const FieldSpec& f, VerifyReport& r) {
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int min_part) {
        if (parts.size() >= 2 && remaining == 0) {
            std::ostringstream what;
            what << "kpartite:";
            for (std::size_t i = 0; i < parts.size(); ++i)
                what << (i ? "," : "") << parts[i];
            check_bound_instance(complete_multipartite(parts),
                                 static_cast<long long>(parts.size()) - 1, f,
                                 what.str(), r);
        }
        for (int p = min_part; p <= remaining; ++p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    for (int total = 2; total <= n_max; ++total) rec(total, 1);
}

void verify_rooted_tree(int n_max, const FieldSpec& f, VerifyReport& r) {
    for (int n = 1; n <= n_max; ++n)
        for (const RootedTree& tree : enumerate_rooted_trees(n)) {
            Graph shape(tree.n);
            for (int v = 0; v < tree.n; ++v)
                if (tree.parent[v] >= 0) shape.add_edge(v, tree.parent[v]);
            for (int t = 1; t <= tree.height() + 1; ++t) {
                ++r.instances;
                const auto rep = check_subadditivity(
                    hochster_betti(t_path_ideal(tree, t), f));
                for (const auto& v : rep.violations) {
                    std::ostringstream d;
                    d << "path ideal t=" << t << " (root " << tree.root
                      << "): t_" << v.a + v.b << "=" << v.t_ab << " > t_" << v.a
                      << "+t_" << v.b << "=" << v.t_a + v.t_b;
                    fail(r, shape, d.str());
                }
            }
        }
}

const std::map<std::string, Checker>& checkers() {
    static const std::map<std::string, Checker> table = {
        {"indsub", verify_indsub},
        {"nug1", verify_nug1},
        {"tb", verify_tb},
        {"subedge", verify_subedge},
        {"greg", verify_greg},
        {"gprime_strand", verify_gprime_strand},
        {"strandvertex", verify_strandvertex},
        {"strandjoin", verify_strandjoin},
        {"uc_multigraded", verify_uc_multigraded},
        {"cone_bound", verify_cone_bound},
        {"jahangir_bound", verify_jahangir_bound},
        {"fan_bound", verify_fan_bound},
        {"kpartite_bound", verify_kpartite_bound},
        {"rooted_tree", verify_rooted_tree},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& known_theorems() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : checkers()) out.push_back(name);
        return out;
    }();
    return names;
}

VerifyReport verify_theorem(const std::string& name, int n_max,
                            const FieldSpec& f) {
    auto it = checkers().find(name);
    if (it == checkers().end())
        throw std::invalid_argument("unknown theorem name: " + name);
    VerifyReport r;
    r.theorem = name;
    r.n_max = n_max;
    const auto start = std::chrono::steady_clock::now();
    it->second(n_max, f, r);
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::sort(r.failures.begin(), r.failures.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(a.graph, a.detail) < std::tie(b.graph, b.detail);
              });
    return r;
}

std::string search_open_questions(int n_max, const FieldSpec& f) {
    nlohmann::ordered_json questions = nlohmann::json::array();

    struct Question {
        std::string text;
        long long instances = 0;
        std::optional<std::pair<std::string, std::string>> counterexample;
    };
    Question q1{"strand connectivity of an edge ideal inherited by every "
                "non-trivial induced subgraph"},
        q2{"reg = induced matching number implies strand connected"},
        q3{"j-strand connected whenever j <= induced matching number"};

    EnumOptions opt;
    opt.connected_only = true;
    for (int n = 1; n <= n_max; ++n)
        for (const Graph& g : enumerate_graphs(n, opt)) {
            if (g.is_trivial()) continue;
            const BettiTable t = hochster_betti(edge_ideal(g), f);
            const StrandReport rep = strand_report(t);
            const int nu = induced_matching_number(g);

            if (rep.all_connected) {
                ++q1.instances;
                if (!q1.counterexample)
                    for (Mask w = 1; w < full_mask(g.n); ++w) {
                        const Graph h = induced_subgraph(g, w);
                        if (h.is_trivial()) continue;
                        if (!strand_report(
                                 hochster_betti(edge_ideal(h), f))
                                 .all_connected) {
                            q1.counterexample = {
                                format_graph(g),
                                "induced subgraph on mask " +
                                    std::to_string(w) +
                                    " has a disconnected strand"};
                            break;
                        }
                    }
            }

            if (t.reg() == nu) {
                ++q2.instances;
                if (!q2.counterexample && !rep.all_connected)
                    q2.counterexample = {format_graph(g),
                                         "reg = nu but a strand has gaps"};
            }

            ++q3.instances;
            if (!q3.counterexample)
                for (const auto& s : rep.strands)
                    if (s.j <= nu && !s.connected) {
                        q3.counterexample = {
                            format_graph(g), std::to_string(s.j) +
                                                 "-strand has gaps with j <= "
                                                 "nu = " + std::to_string(nu)};
                        break;
                    }
        }

    for (const Question& q : {q1, q2, q3}) {
        nlohmann::ordered_json e;
        e["question"] = q.text;
        e["instances"] = q.instances;
        if (q.counterexample)
            e["counterexample"] = {{"graph", q.counterexample->first},
                                   {"detail", q.counterexample->second}};
        else
            e["counterexample"] = nullptr;
        e["conclusion"] = q.counterexample
                              ? "counterexample found"
                              : "no counterexample up to n_max; not a proof";
        questions.push_back(e);
    }

    nlohmann::ordered_json out;
    out["n_max"] = n_max;
    out["field_char"] = f.characteristic;
    out["questions"] = questions;
    return out.dump(2) + "\n";
}

}  // namespace bf
