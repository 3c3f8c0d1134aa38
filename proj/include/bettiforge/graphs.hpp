#ifndef BETTIFORGE_GRAPHS_HPP
#define BETTIFORGE_GRAPHS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bettiforge/ideals.hpp"
#include "bettiforge/mask.hpp"

namespace bf {

// Finite simple graph with per-vertex neighbor bitmasks.
struct Graph {
    int n = 0;
    std::vector<Mask> adj;

    explicit Graph(int n_ = 0) : n(n_), adj(n_, 0) {}

    bool has_edge(int u, int v) const { return (adj[u] & bit(v)) != 0; }
    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop");
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
    bool is_trivial() const { return edge_count() == 0; }
    bool is_connected() const;
    bool is_cycle_graph() const;   // connected, all degrees 2
    bool is_chordal() const;       // simplicial elimination ordering
    bool is_unicyclic() const;     // connected with exactly one cycle
    int girth_of_unicyclic() const;   // length of the unique cycle
    Mask cycle_support_of_unicyclic() const;
    std::vector<Mask> components() const;
};

// A rooted tree; edges are directed away from the root.
struct RootedTree {
    int n = 0;
    int root = 0;
    std::vector<int> parent;  // parent[root] == -1

    std::vector<std::vector<int>> children() const;
    int height() const;
};

// --- named families and constructors ---------------------------------
// Vertex numbering is fixed per family: paths/cycles run 0..n-1 in
// order, part blocks of a multipartite graph are consecutive, and apex
// vertices are appended last.
Graph path_graph(int n);
Graph cycle_graph(int n);                 // n >= 3
Graph complete_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph star_graph(int leaves);             // leaves 0..k-1, center k
Graph wheel_graph(int n);                 // x * C_n, apex n
Graph jahangir_graph(int n);              // x *_U C_{2n}, U odd positions, n >= 2
Graph fan_graph(int m, int n);            // m apexes over P_n, apexes last
Graph cone_along(const Graph& g, Mask u); // new vertex g.n joined to u
Graph join_graphs(const Graph& g, const Graph& h);
// Glue h onto g, identifying h's vertex identify[k] with g's vertex k's
// image: identify maps V(h) indices to either a vertex of g (>= 0) or -1
// for a fresh vertex.  The identified set must induce the same complete
// graph in both.
Graph clique_sum(const Graph& g, const Graph& h, const std::vector<int>& identify);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph delete_edge(const Graph& g, int u, int v);
Graph induced_subgraph(const Graph& g, Mask w);  // relabeled compactly

// --- ideals ----------------------------------------------------------
SquarefreeIdeal edge_ideal(const Graph& g);
SimplicialComplex independence_complex(const Graph& g);
// Generators: vertex sets of directed paths with len_vertices vertices.
SquarefreeIdeal t_path_ideal(const RootedTree& t, int len_vertices);

// --- invariants ------------------------------------------------------
int induced_matching_number(const Graph& g);
int min_vertex_cover_size(const Graph& g);
bool is_vertex_cover(const Graph& g, Mask c);
// True iff some induced cycle of length >= min_len has length congruent
// to residue mod modulus.
bool has_induced_cycle_mod(const Graph& g, int residue, int modulus,
                           int min_len = 3);

// --- the hereditary class G and G' -----------------------------------
// Smallest ordered edge (x, y) with N(x) <= N[y], if any.
std::optional<std::pair<int, int>> find_cone_edge(const Graph& g);
bool in_class_G(const Graph& g);
bool in_class_Gprime(const Graph& g);
// I(G \ e) : xy = I(G \ N[y]) + (variables of N_{G\e}(y)), on the full
// ground set.  Requires e in E(G) and N(x) <= N[y].
SquarefreeIdeal colon_edge_ideal(const Graph& g, int x, int y);

// --- canonicalization and enumeration --------------------------------
// Canonical adjacency encoding: upper-triangle bits of the adjacency
// matrix, minimized over all vertex permutations (n <= 11).
std::uint64_t canonical_form(const Graph& g);

struct EnumOptions {
    bool connected_only = false;
    bool up_to_iso = true;
    bool chordal_only = false;
    bool unicyclic_only = false;
    bool class_G_only = false;
};
// All graphs on exactly n vertices matching the options.
std::vector<Graph> enumerate_graphs(int n, const EnumOptions& opt = {});
// All rooted trees on exactly n vertices, one per isomorphism class of
// rooted trees.
std::vector<RootedTree> enumerate_rooted_trees(int n);

// --- text formats ----------------------------------------------------
// Edge-list: first line n, then "u v" per edge, 0-indexed.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);
// Family mini-language: cycle:5, wheel:6, jahangir:4, fan:2,5,
// kpartite:2,2,2, path:7, complete:4, star:3.
Graph parse_family(const std::string& spec);

}  // namespace bf

#endif
