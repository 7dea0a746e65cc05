#pragma once

// Shared test-side oracles and generators. Everything here is deliberately
// independent of the library's computation paths: plain enumeration, no
// memoization, no multiset grouping.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cst/graph.hpp"
#include "cst/partition.hpp"
#include "cst/symfunc.hpp"

namespace testutil {

// Counts 0/1 matrices with the given row/column sums by enumerating, row by
// row, every subset of columns a row's ones can occupy.
inline cst::Int brute_count_01_matrices(const cst::Partition& rows, const cst::Partition& cols) {
    const int k = rows.part_count(), l = cols.part_count();
    cst::Int total = 0;
    std::vector<int> remaining = cols.parts();
    std::vector<int> subset;
    auto place = [&](auto&& self, int row) -> void {
        if (row == k) {
            if (std::all_of(remaining.begin(), remaining.end(), [](int c) { return c == 0; }))
                ++total;
            return;
        }
        const int need = rows.parts()[row];
        subset.clear();
        auto choose = [&](auto&& inner, int from, int left) -> void {
            if (left == 0) {
                self(self, row + 1);
                return;
            }
            for (int c = from; c <= l - left; ++c) {
                if (remaining[c] == 0) continue;
                --remaining[c];
                inner(inner, c + 1, left - 1);
                ++remaining[c];
            }
        };
        choose(choose, 0, need);
    };
    if (rows.weight() != cols.weight()) return 0;
    if (k == 0) return 1;
    place(place, 0);
    return total;
}

// Asteroidal-triple test by explicit simple-path enumeration in the full
// graph: a pair qualifies against z when some simple path between them
// avoids N(z) u {z} entirely.
inline bool brute_is_asteroidal(const cst::Graph& g, int x, int y, int z) {
    const int n = g.vertex_count();
    std::vector<char> banned(static_cast<std::size_t>(n), 0);
    auto pair_has_path = [&](int from, int to) {
        std::vector<char> on_path(static_cast<std::size_t>(n), 0);
        bool found = false;
        auto dfs = [&](auto&& self, int v) -> void {
            if (found || banned[static_cast<std::size_t>(v)]) return;
            if (v == to) {
                found = true;
                return;
            }
            on_path[static_cast<std::size_t>(v)] = 1;
            for (int u = 0; u < n && !found; ++u)
                if (g.adjacent(v, u) && !on_path[static_cast<std::size_t>(u)]) self(self, u);
            on_path[static_cast<std::size_t>(v)] = 0;
        };
        dfs(dfs, from);
        return found;
    };
    auto check_pair = [&](int a, int b, int c) {
        std::fill(banned.begin(), banned.end(), 0);
        banned[static_cast<std::size_t>(c)] = 1;
        for (int u = 0; u < n; ++u)
            if (g.adjacent(c, u)) banned[static_cast<std::size_t>(u)] = 1;
        return pair_has_path(a, b);
    };
    return check_pair(x, y, z) && check_pair(x, z, y) && check_pair(y, z, x);
}

inline bool brute_has_asteroidal_triple(const cst::Graph& g) {
    const int n = g.vertex_count();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y)) continue;
            for (int z = y + 1; z < n; ++z) {
                if (g.adjacent(x, z) || g.adjacent(y, z)) continue;
                if (brute_is_asteroidal(g, x, y, z)) return true;
            }
        }
    return false;
}

// Isomorphism by trying all vertex permutations; small graphs only.
inline bool brute_isomorphic(const cst::Graph& g, const cst::Graph& h) {
    const int n = g.vertex_count();
    if (h.vertex_count() != n) return false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                ok = g.adjacent(u, v) ==
                     h.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline cst::Graph random_graph(std::mt19937& rng, int n, double p) {
    cst::Graph g(n);
    std::bernoulli_distribution flip(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) g.add_edge(u, v);
    return g;
}

inline cst::SymPoly random_e_poly(std::mt19937& rng, int degree) {
    cst::SymPoly out(cst::Basis::E, degree);
    auto parts = cst::partitions_of(degree);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::bernoulli_distribution keep(0.4);
    for (const auto& key : parts)
        if (keep(rng)) out.add_term(key, coeff(rng));
    return out;
}

} // namespace testutil
