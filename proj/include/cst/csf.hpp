#pragma once

#include <optional>
#include <string>

#include "cst/graph.hpp"
#include "cst/symfunc.hpp"

namespace cst {

inline constexpr int kDefaultCensusVertexBound = 16;
inline constexpr int kDefaultOracleVertexBound = 9;

// Counts of stable partitions per type: counts[lambda] is the number of
// vertex partitions into stable blocks whose sorted block sizes equal lambda.
struct StableCensus {
    int degree = 0;
    SymPoly::TermMap counts;
};

/* Exhaustive stable-partition census. Enumeration places the lowest-indexed
 * unplaced vertex into each existing stable block in creation order, then
 * into a fresh block, pruning on stability; every stable partition is
 * visited exactly once. Graphs beyond `max_vertices` throw BoundError.
 */
StableCensus stable_partition_census(const Graph& g,
                                     int max_vertices = kDefaultCensusVertexBound);

// Chromatic symmetric function in the monomial basis: the census gives the
// augmented-monomial coefficients, which are then rescaled.
SymPoly csf_m(const Graph& g, int max_vertices = kDefaultCensusVertexBound);

// Chromatic symmetric function in the elementary basis (exact integers).
SymPoly csf_e(const Graph& g, int max_vertices = kDefaultCensusVertexBound);

/* Slow independent oracle: counts proper colorings kappa with color i used
 * exactly lambda_i times (colors 1..k, k = part count). Equals the
 * m_lambda-coefficient of the chromatic symmetric function. Deliberately a
 * different route from the census; kept to small graphs.
 */
Int coloring_count_oracle(const Graph& g, const Partition& lambda,
                          int max_vertices = kDefaultOracleVertexBound);

struct EposVerdict {
    std::string graph;              // caller-supplied label
    SymPoly e_expansion{Basis::E, 0};
    bool positive = false;
    std::optional<Partition> witness; // first negative key in canonical order
};

EposVerdict e_positivity(const Graph& g, std::string label = "",
                         int max_vertices = kDefaultCensusVertexBound);

} // namespace cst
