#include "cst/csf.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

namespace cst {

namespace {

struct CensusBlock {
    std::uint64_t conflict; // union of members' neighborhoods
    int size;
};

} // namespace

StableCensus stable_partition_census(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (max_vertices < 1) throw DomainError("census vertex bound must be positive");
    if (n > max_vertices)
        throw BoundError("stable_partition_census: graph has " + std::to_string(n) +
                         " vertices, bound is " + std::to_string(max_vertices));
    if (n > 64) throw BoundError("stable_partition_census: graphs beyond 64 vertices unsupported");

    std::vector<std::uint64_t> nbr(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) nbr[u] |= std::uint64_t(1) << v;

    std::map<std::vector<int>, std::uint64_t> raw; // sorted-desc block sizes -> count
    std::vector<CensusBlock> blocks;
    std::vector<int> sizes;
    std::function<void(int)> place = [&](int v) {
        if (v == n) {
            sizes.clear();
            for (const auto& b : blocks) sizes.push_back(b.size);
            std::sort(sizes.begin(), sizes.end(), std::greater<int>());
            ++raw[sizes];
            return;
        }
        const std::uint64_t vbit = std::uint64_t(1) << v;
        // recursion appends (and pops) deeper blocks, so index, don't iterate
        const std::size_t existing = blocks.size();
        for (std::size_t i = 0; i < existing; ++i) {
            if (blocks[i].conflict & vbit) continue; // v is adjacent to a member
            const std::uint64_t saved = blocks[i].conflict;
            blocks[i].conflict |= nbr[v];
            ++blocks[i].size;
            place(v + 1);
            --blocks[i].size;
            blocks[i].conflict = saved;
        }
        blocks.push_back({nbr[v], 1});
        place(v + 1);
        blocks.pop_back();
    };
    place(0);

    StableCensus out;
    out.degree = n;
    for (const auto& [shape, count] : raw) out.counts.emplace(Partition(shape), Int(count));
    return out;
}

SymPoly csf_m(const Graph& g, int max_vertices) {
    StableCensus census = stable_partition_census(g, max_vertices);
    SymPoly mtilde(Basis::MTilde, census.degree);
    for (const auto& [type, count] : census.counts) mtilde.add_term(type, count);
    return mtilde_to_m(mtilde);
}

SymPoly csf_e(const Graph& g, int max_vertices) { return m_to_e(csf_m(g, max_vertices)); }

Int coloring_count_oracle(const Graph& g, const Partition& lambda, int max_vertices) {
    const int n = g.vertex_count();
    if (lambda.weight() != n)
        throw DomainError("coloring_count_oracle: partition weight must equal vertex count");
    if (max_vertices < 1) throw DomainError("oracle vertex bound must be positive");
    if (n > max_vertices)
        throw BoundError("coloring_count_oracle: graph has " + std::to_string(n) +
                         " vertices, bound is " + std::to_string(max_vertices));
    const int k = lambda.part_count();
    std::vector<int> capacity = lambda.parts();
    std::vector<int> color(n, -1);
    Int count = 0;
    std::function<void(int)> assign = [&](int v) {
        if (v == n) {
            ++count;
            return;
        }
        for (int c = 0; c < k; ++c) {
            if (capacity[c] == 0) continue;
            bool clash = false;
            for (int u = 0; u < v && !clash; ++u) clash = color[u] == c && g.adjacent(u, v);
            if (clash) continue;
            --capacity[c];
            color[v] = c;
            assign(v + 1);
            ++capacity[c];
            color[v] = -1;
        }
    };
    assign(0);
    return count;
}

EposVerdict e_positivity(const Graph& g, std::string label, int max_vertices) {
    EposVerdict verdict;
    verdict.graph = std::move(label);
    verdict.e_expansion = csf_e(g, max_vertices);
    verdict.positive = true;
    for (const auto& [key, c] : verdict.e_expansion.terms()) {
        if (c < 0) {
            verdict.positive = false;
            verdict.witness = key;
            break;
        }
    }
    return verdict;
}

} // namespace cst
