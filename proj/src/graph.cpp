#include "cst/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>

namespace cst {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw DomainError("graph vertex count must be nonnegative");
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw DomainError("add_edge: vertex out of range");
    if (u == v) throw DomainError("add_edge: loops are not allowed");
    if (!adj_[idx(u, v)]) ++edges_;
    adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
}

int Graph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u) d += adj_[idx(v, u)];
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adj_[idx(v, u)]) out.push_back(u);
    return out;
}

Graph build_gp(int r, int s, int t) {
    if (r < 0 || s < 0 || t < 0) throw DomainError("build_gp: parameters must be nonnegative");
    const int n = r + s + t + 3;
    Graph g(n);
    const int a = 0, b = 1, c = 2;
    const int sab_begin = 3, sac_begin = 3 + r, sbc_begin = 3 + r + s;
    // the three S-blocks together form one clique
    for (int u = 3; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    for (int u = sab_begin; u < sac_begin; ++u) { // S_ab: everything but c
        g.add_edge(u, a);
        g.add_edge(u, b);
    }
    for (int u = sac_begin; u < sbc_begin; ++u) { // S_ac: everything but b
        g.add_edge(u, a);
        g.add_edge(u, c);
    }
    for (int u = sbc_begin; u < n; ++u) { // S_bc: everything but a
        g.add_edge(u, b);
        g.add_edge(u, c);
    }
    return g;
}

Graph build_gb(int r, int s, int t) {
    if (r < 0 || s < 0 || t < 0) throw DomainError("build_gb: parameters must be nonnegative");
    const int n = r + s + t + 2;
    Graph g(n);
    const int a = 0, b = 1;
    for (int u = 2; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    for (int u = 2; u < 2 + r; ++u) g.add_edge(a, u);
    for (int u = 2 + r; u < 2 + r + s; ++u) g.add_edge(b, u);
    return g;
}

Graph build_complete(int k) {
    if (k < 0) throw DomainError("build_complete: size must be nonnegative");
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

Graph build_path(int k) {
    if (k < 0) throw DomainError("build_path: size must be nonnegative");
    Graph g(k);
    for (int u = 0; u + 1 < k; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph build_cycle(int k) {
    if (k < 3) throw DomainError("build_cycle: need at least 3 vertices");
    Graph g = build_path(k);
    g.add_edge(k - 1, 0);
    return g;
}

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::optional<int> trailing_size(const std::string& name, char prefix) {
    if (name.size() < 2 || name[0] != prefix) return std::nullopt;
    int value = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        value = value * 10 + (name[i] - '0');
        if (value > 100000) throw DomainError("pattern size too large: " + name);
    }
    return value;
}

} // namespace

Graph build_pattern(const std::string& name) {
    if (name == "K4") return build_complete(4);
    if (name == "diamond") return from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    if (name == "C4") return build_cycle(4);
    if (name == "paw") return from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    if (name == "claw") return from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    if (name == "P4") return build_path(4);
    if (name == "4K1") return Graph(4);
    if (name == "co-diamond") return from_edges(4, {{0, 1}});
    if (name == "2K2") return from_edges(4, {{0, 1}, {2, 3}});
    if (name == "co-paw") return from_edges(4, {{0, 1}, {1, 2}});
    if (name == "co-claw") return from_edges(4, {{0, 1}, {0, 2}, {1, 2}});
    if (name == "co-triangle") return Graph(3);
    if (auto k = trailing_size(name, 'K')) return build_complete(*k);
    if (auto k = trailing_size(name, 'P')) return build_path(*k);
    if (auto k = trailing_size(name, 'C')) return build_cycle(*k);
    throw DomainError("unknown pattern name '" + name + "'");
}

Graph labeled_graph_from_code(int n, std::uint64_t code) {
    if (n < 0 || n > 11) throw BoundError("labeled_graph_from_code supports n <= 11");
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (code >> bit & 1) g.add_edge(u, v);
    return g;
}

std::uint64_t labeled_graph_code_count(int n) {
    if (n < 0 || n > 11) throw BoundError("labeled_graph_code_count supports n <= 11");
    return std::uint64_t(1) << (n * (n - 1) / 2);
}

namespace {

// Backtracking isomorphism between whole small graphs; pattern vertices are
// matched in descending-degree order so mismatches die early.
class IsoSearch {
public:
    IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h) {}

    std::optional<std::vector<int>> run() {
        const int n = g_.vertex_count();
        if (n != h_.vertex_count() || g_.edge_count() != h_.edge_count()) return std::nullopt;
        if (n > 14) throw BoundError("find_isomorphism is limited to 14 vertices");
        std::vector<int> gdeg(n), hdeg(n);
        for (int v = 0; v < n; ++v) {
            gdeg[v] = g_.degree(v);
            hdeg[v] = h_.degree(v);
        }
        auto sorted = [](std::vector<int> d) {
            std::sort(d.begin(), d.end());
            return d;
        };
        if (sorted(gdeg) != sorted(hdeg)) return std::nullopt;

        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            return gdeg[a] != gdeg[b] ? gdeg[a] > gdeg[b] : a < b;
        });
        map_.assign(n, -1);
        used_.assign(n, 0);
        gdeg_ = std::move(gdeg);
        hdeg_ = std::move(hdeg);
        return extend(0) ? std::optional(map_) : std::nullopt;
    }

private:
    bool extend(std::size_t pos) {
        if (pos == order_.size()) return true;
        int u = order_[pos];
        for (int w = 0; w < h_.vertex_count(); ++w) {
            if (used_[w] || gdeg_[u] != hdeg_[w]) continue;
            bool ok = true;
            for (std::size_t i = 0; i < pos && ok; ++i) {
                int prev = order_[i];
                ok = g_.adjacent(u, prev) == h_.adjacent(w, map_[prev]);
            }
            if (!ok) continue;
            map_[u] = w;
            used_[w] = 1;
            if (extend(pos + 1)) return true;
            used_[w] = 0;
            map_[u] = -1;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<int> order_, map_, gdeg_, hdeg_;
    std::vector<char> used_;
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    return IsoSearch(g, h).run();
}

std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& h) {
    const int n = g.vertex_count(), k = h.vertex_count();
    if (k > n) return std::nullopt;
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
        if (find_isomorphism(induced_subgraph(g, subset), h)) return subset;
        // advance to the next k-subset in lexicographic order
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) return std::nullopt;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

namespace {

using Mask = std::uint64_t;

int mis_recurse(const std::vector<Mask>& nbr, Mask candidates) {
    if (candidates == 0) return 0;
    // branch on a candidate of maximum residual degree
    int pivot = -1, pivot_deg = -1;
    for (Mask m = candidates; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        int d = std::popcount(nbr[v] & candidates);
        if (d > pivot_deg) {
            pivot_deg = d;
            pivot = v;
        }
    }
    if (pivot_deg == 0) return std::popcount(candidates); // all isolated
    Mask without = candidates & ~(Mask(1) << pivot);
    int best = 1 + mis_recurse(nbr, without & ~nbr[pivot]);
    return std::max(best, mis_recurse(nbr, without));
}

std::vector<Mask> neighbor_masks(const Graph& g) {
    if (g.vertex_count() > 64) throw BoundError("mask-based search is limited to 64 vertices");
    std::vector<Mask> nbr(g.vertex_count(), 0);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) nbr[u] |= Mask(1) << v;
    return nbr;
}

} // namespace

int max_stable_set_size(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    auto nbr = neighbor_masks(g);
    Mask all = g.vertex_count() == 64 ? ~Mask(0) : (Mask(1) << g.vertex_count()) - 1;
    return mis_recurse(nbr, all);
}

std::optional<std::array<int, 3>> find_co_triangle(const Graph& g) {
    const int n = g.vertex_count();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y)) continue;
            for (int z = y + 1; z < n; ++z)
                if (!g.adjacent(x, z) && !g.adjacent(y, z)) return std::array{x, y, z};
        }
    return std::nullopt;
}

LayerDecomposition distance_layers(const Graph& g, int root) {
    if (root < 0 || root >= g.vertex_count()) throw DomainError("distance_layers: bad root");
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    int max_dist = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v)) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                max_dist = std::max(max_dist, dist[u]);
                queue.push_back(u);
            }
        }
    }
    LayerDecomposition out;
    out.root = root;
    out.layers.assign(static_cast<std::size_t>(max_dist) + 1, {});
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] < 0)
            out.unreachable.push_back(v);
        else
            out.layers[static_cast<std::size_t>(dist[v])].push_back(v);
    }
    return out;
}

bool is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> alive(n, 1);
    auto simplicial = [&](int v) {
        std::vector<int> nb;
        for (int u = 0; u < n; ++u)
            if (alive[u] && u != v && g.adjacent(v, u)) nb.push_back(u);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.adjacent(nb[i], nb[j])) return false;
        return true;
    };
    for (int removed = 0; removed < n; ++removed) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v)
            if (alive[v] && simplicial(v)) pick = v;
        if (pick < 0) return false; // no simplicial vertex left
        alive[pick] = 0;
    }
    return true;
}

std::optional<std::vector<int>> find_induced_long_cycle(const Graph& g) {
    for (int k = 4; k <= g.vertex_count(); ++k) {
        if (auto witness = find_induced(g, build_cycle(k))) return witness;
    }
    return std::nullopt;
}

namespace {

bool connected_avoiding(int from, int to, Mask banned,
                        const std::vector<Mask>& nbr) {
    if (banned >> from & 1 || banned >> to & 1) return false;
    Mask seen = Mask(1) << from;
    Mask frontier = seen;
    while (frontier) {
        if (seen >> to & 1) return true;
        Mask next = 0;
        for (Mask m = frontier; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            next |= nbr[v];
        }
        next &= ~seen & ~banned;
        if (!next) return false;
        seen |= next;
        frontier = next;
    }
    return seen >> to & 1;
}

} // namespace

std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) return std::nullopt;
    auto nbr = neighbor_masks(g);
    // testing pair (x,y) against z removes z's closed neighborhood; z itself
    // cannot sit on a qualifying path anyway, since entering it means first
    // passing through N(z)
    auto pair_ok = [&](int x, int y, int z) {
        return connected_avoiding(x, y, nbr[z] | (Mask(1) << z), nbr);
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y)) continue;
            for (int z = y + 1; z < n; ++z) {
                if (g.adjacent(x, z) || g.adjacent(y, z)) continue;
                if (pair_ok(x, y, z) && pair_ok(x, z, y) && pair_ok(y, z, x))
                    return std::array{x, y, z};
            }
        }
    return std::nullopt;
}

bool is_at_free(const Graph& g) { return !find_asteroidal_triple(g).has_value(); }

bool is_unit_interval(const Graph& g) {
    return !find_induced(g, build_pattern("claw")) && is_chordal(g) && is_at_free(g);
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return distance_layers(g, 0).unreachable.empty();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.vertex_count() + h.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v)) out.add_edge(u, v);
    const int shift = g.vertex_count();
    for (int u = 0; u < h.vertex_count(); ++u)
        for (int v = u + 1; v < h.vertex_count(); ++v)
            if (h.adjacent(u, v)) out.add_edge(u + shift, v + shift);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

std::vector<std::vector<int>> component_vertex_sets(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[v]) continue;
        auto layers = distance_layers(g, v);
        std::vector<int> comp;
        for (const auto& layer : layers.layers) comp.insert(comp.end(), layer.begin(), layer.end());
        std::sort(comp.begin(), comp.end());
        for (int u : comp) seen[u] = 1;
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> out;
    for (const auto& comp : component_vertex_sets(g)) out.push_back(induced_subgraph(g, comp));
    return out;
}

} // namespace cst
