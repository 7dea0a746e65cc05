#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cst/common.hpp"

namespace cst {

/* A finite simple graph on vertices {0,...,n-1}: symmetric, irreflexive
 * adjacency. Immutable in practice: built once by a constructor function,
 * then only queried.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return edges_; }
    bool adjacent(int u, int v) const { return adj_[idx(u, v)] != 0; }
    void add_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    bool operator==(const Graph& other) const = default;

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }

    int n_ = 0;
    int edges_ = 0;
    std::vector<char> adj_;
};

// Breadth-first distance layers from a root: layers[0] = {root},
// layers[i] = vertices at distance exactly i. Vertices in other components
// are listed in `unreachable`.
struct LayerDecomposition {
    int root = 0;
    std::vector<std::vector<int>> layers;
    std::vector<int> unreachable;
};

/* Generalized pyramid GP(r,s,t): apexes a=0, b=1, c=2 pairwise nonadjacent;
 * then blocks S_ab (r vertices), S_ac (s), S_bc (t) forming one clique, with
 * every S_ab vertex adjacent to all vertices except c, S_ac except b, and
 * S_bc except a. Zero block sizes are allowed.
 */
Graph build_gp(int r, int s, int t);

/* Generalized bull GB(r,s,t): pendant-side vertices a=0 and b=1, then blocks
 * K_r, K_s, K_t forming one clique of size r+s+t; a is adjacent exactly to
 * K_r, b exactly to K_s.
 */
Graph build_gb(int r, int s, int t);

// Named small patterns: the eleven four-vertex graphs ("K4", "diamond",
// "C4", "paw", "claw", "P4", "4K1", "co-diamond", "2K2", "co-paw",
// "co-claw"), "co-triangle" (3 isolated vertices), paths "P<k>", cycles
// "C<k>" and complete graphs "K<k>". Unknown names throw DomainError.
Graph build_pattern(const std::string& name);
Graph build_complete(int k);
Graph build_path(int k);
Graph build_cycle(int k);

// Labeled graph on n vertices from an edge bitmask: bit k of `code` controls
// the k-th pair in the order (0,1),(0,2),...,(0,n-1),(1,2),... Requires
// C(n,2) <= 63.
Graph labeled_graph_from_code(int n, std::uint64_t code);
std::uint64_t labeled_graph_code_count(int n); // 2^C(n,2)

// First vertex subset of g (in lexicographic subset order) inducing a graph
// isomorphic to h, or nullopt.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& h);

// Isomorphism g -> h as a vertex mapping, or nullopt. Intended for small
// graphs (refinement-light backtracking).
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

// Exact independence number alpha(G). Branch-and-bound over 64-bit masks;
// graphs beyond 64 vertices throw BoundError.
int max_stable_set_size(const Graph& g);

// First stable triple in lexicographic order, or nullopt (= co-triangle-free).
std::optional<std::array<int, 3>> find_co_triangle(const Graph& g);

LayerDecomposition distance_layers(const Graph& g, int root);

// Chordality via iterated simplicial-vertex elimination.
bool is_chordal(const Graph& g);
// Witness for a non-chordal graph: some induced cycle of length >= 4.
std::optional<std::vector<int>> find_induced_long_cycle(const Graph& g);

// First asteroidal triple in lexicographic order, or nullopt. A stable
// triple is asteroidal when every pair stays connected after deleting the
// third vertex's closed neighborhood.
std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g);
bool is_at_free(const Graph& g);

// Unit interval = claw-free + chordal + AT-free.
bool is_unit_interval(const Graph& g);

bool is_connected(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<std::vector<int>> component_vertex_sets(const Graph& g);
std::vector<Graph> connected_components(const Graph& g);

} // namespace cst
