#include "bettiforge/graphs.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace bf {

int Graph::edge_count() const {
    int deg = 0;
    for (Mask a : adj) deg += popcount(a);
    return deg / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (n == 0) return true;
    Mask seen = bit(0), frontier = bit(0);
    while (frontier) {
        Mask next = 0;
        for (int v : mask_to_vertices(frontier)) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == full_mask(n);
}

bool Graph::is_cycle_graph() const {
    if (n < 3 || !is_connected()) return false;
    for (Mask a : adj)
        if (popcount(a) != 2) return false;
    return true;
}

bool Graph::is_chordal() const {
    Mask alive = full_mask(n);
    int remaining = n;
    while (remaining > 0) {
        int found = -1;
        for (int v : mask_to_vertices(alive)) {
            const Mask nb = adj[v] & alive;
            bool simplicial = true;
            for (int u : mask_to_vertices(nb))
                if ((nb & ~(adj[u] | bit(u))) != 0) { simplicial = false; break; }
            if (simplicial) { found = v; break; }
        }
        if (found < 0) return false;
        alive &= ~bit(found);
        --remaining;
    }
    return true;
}

bool Graph::is_unicyclic() const {
    return n >= 3 && is_connected() && edge_count() == n;
}

Mask Graph::cycle_support_of_unicyclic() const {
    if (!is_unicyclic()) throw std::logic_error("not a unicyclic graph");
    Mask alive = full_mask(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : mask_to_vertices(alive)) {
            if (popcount(adj[v] & alive) == 1) {
                alive &= ~bit(v);
                changed = true;
            }
        }
    }
    return alive;
}

int Graph::girth_of_unicyclic() const {
    return popcount(cycle_support_of_unicyclic());
}

std::vector<Mask> Graph::components() const {
    std::vector<Mask> out;
    Mask todo = full_mask(n);
    while (todo) {
        const int s = std::countr_zero(todo);
        Mask seen = bit(s), frontier = bit(s);
        while (frontier) {
            Mask next = 0;
            for (int v : mask_to_vertices(frontier)) next |= adj[v];
            frontier = next & ~seen;
            seen |= next;
        }
        out.push_back(seen);
        todo &= ~seen;
    }
    return out;
}

std::vector<std::vector<int>> RootedTree::children() const {
    std::vector<std::vector<int>> ch(n);
    for (int v = 0; v < n; ++v)
        if (v != root) {
            if (parent[v] < 0 || parent[v] >= n)
                throw std::invalid_argument("bad parent pointer");
            ch[parent[v]].push_back(v);
        }
    return ch;
}

int RootedTree::height() const {
    int best = 0;
    for (int v = 0; v < n; ++v) {
        int d = 0, u = v;
        while (u != root) {
            u = parent[u];
            ++d;
            if (d > n) throw std::invalid_argument("parent cycle");
        }
        best = std::max(best, d);
    }
    return best;
}

// --- constructors ----------------------------------------------------

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int total = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("part sizes must be positive");
        total += p;
    }
    Graph g(total);
    int a_start = 0;
    for (std::size_t a = 0; a < parts.size(); ++a) {
        int b_start = a_start + parts[a];
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
            for (int u = a_start; u < a_start + parts[a]; ++u)
                for (int v = b_start; v < b_start + parts[b]; ++v)
                    g.add_edge(u, v);
            b_start += parts[b];
        }
        a_start += parts[a];
    }
    return g;
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs >= 1 leaf");
    Graph g(leaves + 1);
    for (int i = 0; i < leaves; ++i) g.add_edge(i, leaves);
    return g;
}

Graph cone_along(const Graph& g, Mask u) {
    if ((u & ~full_mask(g.n)) != 0)
        throw std::invalid_argument("cone set outside vertex set");
    Graph out(g.n + 1);
    out.adj = g.adj;
    out.adj.push_back(0);
    for (int v : mask_to_vertices(u)) out.add_edge(v, g.n);
    return out;
}

Graph wheel_graph(int n) { return cone_along(cycle_graph(n), full_mask(n)); }

Graph jahangir_graph(int n) {
    if (n < 2) throw std::invalid_argument("jahangir needs n >= 2");
    Mask odd = 0;
    for (int i = 1; i < 2 * n; i += 2) odd |= bit(i);
    return cone_along(cycle_graph(2 * n), odd);
}

Graph fan_graph(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("fan needs m,n >= 1");
    Graph g = path_graph(n);
    const Mask u = full_mask(n);
    for (int i = 0; i < m; ++i) g = cone_along(g, u);
    return g;
}

Graph join_graphs(const Graph& g, const Graph& h) {
    Graph out(g.n + h.n);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.n + u, g.n + v);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < h.n; ++v) out.add_edge(u, g.n + v);
    return out;
}

Graph clique_sum(const Graph& g, const Graph& h, const std::vector<int>& identify) {
    if (static_cast<int>(identify.size()) != h.n)
        throw std::invalid_argument("identification must cover V(h)");
    std::vector<int> image(h.n, -1);
    int fresh = g.n;
    std::vector<int> shared_h;
    for (int v = 0; v < h.n; ++v) {
        if (identify[v] < 0) {
            image[v] = fresh++;
        } else {
            if (identify[v] >= g.n)
                throw std::invalid_argument("identification target out of range");
            image[v] = identify[v];
            shared_h.push_back(v);
        }
    }
    // the glued set must induce complete graphs on both sides
    for (std::size_t a = 0; a < shared_h.size(); ++a)
        for (std::size_t b = a + 1; b < shared_h.size(); ++b) {
            if (!h.has_edge(shared_h[a], shared_h[b]) ||
                !g.has_edge(image[shared_h[a]], image[shared_h[b]]))
                throw std::invalid_argument(
                    "clique sum overlap is not a complete graph");
        }
    Graph out(fresh);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges())
        if (!out.has_edge(image[u], image[v])) out.add_edge(image[u], image[v]);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.n + h.n);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.n + u, g.n + v);
    return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
    Graph out = g;
    out.adj[u] &= ~bit(v);
    out.adj[v] &= ~bit(u);
    return out;
}

Graph induced_subgraph(const Graph& g, Mask w) {
    Graph out(popcount(w));
    for (int v : mask_to_vertices(w))
        out.adj[rank_in(w, v)] = compress(g.adj[v] & w, w);
    return out;
}

// --- ideals ----------------------------------------------------------

SquarefreeIdeal edge_ideal(const Graph& g) {
    std::vector<Mask> gens;
    for (auto [u, v] : g.edges()) gens.push_back(bit(u) | bit(v));
    return make_ideal(g.n, std::move(gens));
}

SimplicialComplex independence_complex(const Graph& g) {
    return stanley_reisner_complex(edge_ideal(g));
}

SquarefreeIdeal t_path_ideal(const RootedTree& t, int len_vertices) {
    if (len_vertices < 1 || len_vertices > t.height() + 1)
        throw std::invalid_argument("path length out of range 1..height+1");
    std::vector<Mask> gens;
    for (int v = 0; v < t.n; ++v) {
        // the directed path of len_vertices vertices ending at v, if any
        Mask m = 0;
        int u = v;
        bool ok = true;
        for (int step = 0; step < len_vertices; ++step) {
            m |= bit(u);
            if (step + 1 < len_vertices) {
                if (u == t.root) { ok = false; break; }
                u = t.parent[u];
            }
        }
        if (ok) gens.push_back(m);
    }
    return make_ideal(t.n, std::move(gens));
}

// --- invariants ------------------------------------------------------

int induced_matching_number(const Graph& g) {
    const auto es = g.edges();
    const int m = static_cast<int>(es.size());
    if (m == 0) return 0;
    // conflict graph on edges: two edges conflict if they share a vertex
    // or some edge of G joins them
    std::vector<std::uint64_t> conf(m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const auto [u1, v1] = es[a];
            const auto [u2, v2] = es[b];
            const bool clash = u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 ||
                               g.has_edge(u1, u2) || g.has_edge(u1, v2) ||
                               g.has_edge(v1, u2) || g.has_edge(v1, v2);
            if (clash) {
                conf[a] |= std::uint64_t{1} << b;
                conf[b] |= std::uint64_t{1} << a;
            }
        }
    // max independent set in the conflict graph, branching on the
    // highest-degree candidate
    std::function<int(std::uint64_t)> mis = [&](std::uint64_t cand) -> int {
        if (cand == 0) return 0;
        int best_v = -1, best_deg = -1;
        std::uint64_t rest = cand;
        while (rest) {
            const int v = std::countr_zero(rest);
            const int deg = std::popcount(conf[v] & cand);
            if (deg > best_deg) { best_deg = deg; best_v = v; }
            rest &= rest - 1;
        }
        if (best_deg == 0) return std::popcount(cand);  // all independent
        const std::uint64_t vb = std::uint64_t{1} << best_v;
        const int with_v = 1 + mis(cand & ~(conf[best_v] | vb));
        const int without_v = mis(cand & ~vb);
        return std::max(with_v, without_v);
    };
    return mis((m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1));
}

bool is_vertex_cover(const Graph& g, Mask c) {
    for (auto [u, v] : g.edges())
        if (!(c & bit(u)) && !(c & bit(v))) return false;
    return true;
}

int min_vertex_cover_size(const Graph& g) {
    int best = g.n;
    const Mask all = full_mask(g.n);
    for (Mask c = 0;; ++c) {
        if (popcount(c) < best && is_vertex_cover(g, c)) best = popcount(c);
        if (c == all) break;
    }
    return best;
}

bool has_induced_cycle_mod(const Graph& g, int residue, int modulus, int min_len) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    const Mask all = full_mask(g.n);
    for (Mask w = 0;; ++w) {
        const int len = popcount(w);
        if (len >= std::max(3, min_len) && len % modulus == residue % modulus) {
            if (induced_subgraph(g, w).is_cycle_graph()) return true;
        }
        if (w == all) break;
    }
    return false;
}

// --- the class G -----------------------------------------------------

std::optional<std::pair<int, int>> find_cone_edge(const Graph& g) {
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) {
            if (x == y || !g.has_edge(x, y)) continue;
            if ((g.adj[x] & ~(g.adj[y] | bit(y))) == 0) return {{x, y}};
        }
    return std::nullopt;
}

namespace {

std::unordered_map<std::uint64_t, bool>& class_G_memo() {
    static std::unordered_map<std::uint64_t, bool> memo;
    return memo;
}

bool connected_component_in_G(const Graph& h);

bool in_class_G_impl(const Graph& g) {
    for (Mask comp : g.components()) {
        if (!connected_component_in_G(induced_subgraph(g, comp))) return false;
    }
    return true;
}

bool connected_component_in_G(const Graph& h) {
    if (h.is_trivial()) return true;
    if (h.is_cycle_graph()) return true;
    const std::uint64_t key =
        (static_cast<std::uint64_t>(h.n) << 56) | canonical_form(h);
    auto& memo = class_G_memo();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (int x = 0; x < h.n && !ok; ++x)
        for (int y = 0; y < h.n && !ok; ++y) {
            if (x == y || !h.has_edge(x, y)) continue;
            if ((h.adj[x] & ~(h.adj[y] | bit(y))) != 0) continue;
            if (in_class_G_impl(delete_edge(h, x, y))) ok = true;
        }
    memo.emplace(key, ok);
    return ok;
}

}  // namespace

bool in_class_G(const Graph& g) { return in_class_G_impl(g); }

bool in_class_Gprime(const Graph& g) {
    return in_class_G(g) && !has_induced_cycle_mod(g, 2, 3, 3);
}

SquarefreeIdeal colon_edge_ideal(const Graph& g, int x, int y) {
    if (!g.has_edge(x, y)) throw std::invalid_argument("e must be an edge");
    if ((g.adj[x] & ~(g.adj[y] | bit(y))) != 0)
        throw std::invalid_argument("requires N(x) <= N[y]");
    std::vector<Mask> gens;
    // variables of N_{G\e}(y)
    for (int v : mask_to_vertices(g.adj[y] & ~bit(x))) gens.push_back(bit(v));
    // edges of G \ N[y], kept in the full ground numbering
    const Mask removed = g.adj[y] | bit(y);
    for (auto [u, v] : g.edges())
        if (!((bit(u) | bit(v)) & removed)) gens.push_back(bit(u) | bit(v));
    return make_ideal(g.n, std::move(gens));
}

// --- canonicalization ------------------------------------------------

namespace {

// Backtracking minimization of the adjacency encoding.  Placing vertex v
// at position k appends the bits (edge to positions 0..k-1), so prefixes
// compare lexicographically and dominated branches are pruned.
struct Canonicalizer {
    const Graph& g;
    std::vector<int> placed;
    std::vector<std::uint8_t> best, cur;
    bool have_best = false;

    explicit Canonicalizer(const Graph& g_) : g(g_) {}

    void run(Mask unused) {
        const int k = static_cast<int>(placed.size());
        if (k == g.n) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        for (int v : mask_to_vertices(unused)) {
            const std::size_t base = cur.size();
            bool prune = false;
            for (int i = 0; i < k; ++i) {
                const std::uint8_t b = g.has_edge(placed[i], v) ? 1 : 0;
                if (have_best) {
                    const std::uint8_t ref = best[base + i];
                    if (b > ref) { prune = true; break; }
                    if (b < ref) have_best = false;  // strictly better prefix
                }
                cur.push_back(b);
            }
            if (!prune) {
                const bool saved_have_best = have_best;
                placed.push_back(v);
                run(unused & ~bit(v));
                placed.pop_back();
                have_best = have_best || saved_have_best;
            }
            cur.resize(base);
        }
    }
};

}  // namespace

std::uint64_t canonical_form(const Graph& g) {
    if (g.n > 11) throw std::invalid_argument("canonical form supports n <= 11");
    if (g.n <= 1) return 0;
    Canonicalizer c(g);
    c.run(full_mask(g.n));
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < c.best.size(); ++i)
        if (c.best[i]) out |= std::uint64_t{1} << i;
    return out;
}

namespace {

Graph graph_from_encoding(int n, std::uint64_t enc) {
    Graph g(n);
    std::size_t idx = 0;
    for (int k = 1; k < n; ++k)
        for (int i = 0; i < k; ++i, ++idx)
            if (enc & (std::uint64_t{1} << idx)) g.add_edge(i, k);
    return g;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const EnumOptions& opt) {
    if (n < 1 || n > 9)
        throw std::invalid_argument("enumeration supports 1 <= n <= 9");
    std::vector<Graph> out;
    auto keep = [&](const Graph& g) {
        if (opt.connected_only && !g.is_connected()) return false;
        if (opt.chordal_only && !g.is_chordal()) return false;
        if (opt.unicyclic_only && !g.is_unicyclic()) return false;
        if (opt.class_G_only && !in_class_G(g)) return false;
        return true;
    };

    if (!opt.up_to_iso) {
        const int bits = n * (n - 1) / 2;
        for (std::uint64_t enc = 0; enc < (std::uint64_t{1} << bits); ++enc) {
            Graph g = graph_from_encoding(n, enc);
            if (keep(g)) out.push_back(std::move(g));
        }
        return out;
    }

    // One representative per isomorphism class, built by extending the
    // (n-1)-vertex representatives with every neighbor mask of a new
    // vertex.  Every connected graph has a vertex whose removal keeps it
    // connected, so restricting parents to connected graphs is safe when
    // only connected graphs are wanted.
    const bool parents_connected = opt.connected_only || opt.unicyclic_only;
    std::vector<Graph> level;
    level.push_back(Graph(1));
    std::unordered_set<std::uint64_t> seen;
    for (int k = 2; k <= n; ++k) {
        std::vector<Graph> next;
        seen.clear();
        for (const Graph& base : level) {
            const Mask limit = full_mask(k - 1);
            for (Mask nb = 0;; ++nb) {
                if (!(parents_connected && nb == 0)) {
                    Graph g(k);
                    g.adj = base.adj;
                    g.adj.push_back(0);
                    for (int v : mask_to_vertices(nb)) g.add_edge(v, k - 1);
                    if (!parents_connected || g.is_connected()) {
                        const std::uint64_t key = canonical_form(g);
                        if (seen.insert(key).second)
                            next.push_back(graph_from_encoding(k, key));
                    }
                }
                if (nb == limit) break;
            }
        }
        level = std::move(next);
    }
    for (Graph& g : level)
        if (keep(g)) out.push_back(std::move(g));
    return out;
}

namespace {

std::string rooted_canon_string(const std::vector<std::vector<int>>& ch, int v) {
    std::vector<std::string> parts;
    for (int c : ch[v]) parts.push_back(rooted_canon_string(ch, c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
}

}  // namespace

std::vector<RootedTree> enumerate_rooted_trees(int n) {
    EnumOptions opt;
    opt.connected_only = true;
    std::vector<RootedTree> out;
    std::unordered_set<std::string> seen;
    for (const Graph& g : enumerate_graphs(n, opt)) {
        if (g.edge_count() != n - 1) continue;
        for (int root = 0; root < n; ++root) {
            RootedTree t;
            t.n = n;
            t.root = root;
            t.parent.assign(n, -1);
            // BFS from the root to orient edges
            Mask visited = bit(root);
            std::vector<int> frontier{root};
            while (!frontier.empty()) {
                std::vector<int> nxt;
                for (int u : frontier)
                    for (int v : mask_to_vertices(g.adj[u] & ~visited)) {
                        t.parent[v] = u;
                        visited |= bit(v);
                        nxt.push_back(v);
                    }
                frontier = std::move(nxt);
            }
            if (seen.insert(rooted_canon_string(t.children(), root)).second)
                out.push_back(std::move(t));
        }
    }
    return out;
}

// --- text formats ----------------------------------------------------

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0, n = -1;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0 || n > 31)
                throw std::runtime_error("line 1: expected vertex count 0..31");
            g = Graph(n);
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v) || u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": expected edge 'u v' with 0 <= u,v < n");
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    }
    if (n < 0) throw std::runtime_error("empty graph file");
    return g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n << "\n";
    for (auto [u, v] : g.edges()) out << u << ' ' << v << "\n";
    return out.str();
}

Graph parse_family(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("family spec must look like name:args");
    const std::string name = spec.substr(0, colon);
    std::vector<int> args;
    std::istringstream as(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(as, tok, ','))
        args.push_back(std::stoi(tok));
    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw std::runtime_error("family '" + name + "' takes " +
                                     std::to_string(k) + " argument(s)");
    };
    if (name == "path") { want(1); return path_graph(args[0]); }
    if (name == "cycle") { want(1); return cycle_graph(args[0]); }
    if (name == "complete") { want(1); return complete_graph(args[0]); }
    if (name == "star") { want(1); return star_graph(args[0]); }
    if (name == "wheel") { want(1); return wheel_graph(args[0]); }
    if (name == "jahangir") { want(1); return jahangir_graph(args[0]); }
    if (name == "fan") { want(2); return fan_graph(args[0], args[1]); }
    if (name == "kpartite") {
        if (args.empty()) throw std::runtime_error("kpartite needs part sizes");
        return complete_multipartite(args);
    }
    throw std::runtime_error("unknown family '" + name + "'");
}

}  // namespace bf
