#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cst/csf.hpp"
#include "cst/graph.hpp"
#include "cst/symfunc.hpp"

namespace cst {

enum class Family { GP, GB };
std::string family_name(Family f); // "gp" | "gb"

/* The five elementary-basis coefficients of the generalized pyramid
 * expansion, at partitions (r+s+t+1,1,1), (r+s+t,3), (r+s+t+1,2),
 * (r+s+t+2,1) and (r+s+t+3) respectively. A, B, E are nonnegative by
 * inspection; C and D are nonnegative for positive parameters.
 */
struct GPCoefficients {
    int r, s, t;
    Int A, B, C, D, E;
};

GPCoefficients gp_coefficients(int r, int s, int t);

// The grouped summands whose individual nonnegativity (for r,s,t >= 1)
// carries the positivity of C and D: three groups for C's bracket, and the
// full 24-group decomposition of D's bracket.
std::array<Int, 3> gp_c_groups(int r, int s, int t);
std::vector<Int> gp_d_groups(int r, int s, int t);

// Closed-form expansions of the generalized pyramid's chromatic symmetric
// function. Positive parameters only; zero parameters route to the
// brute-force pipeline (csf_m / csf_e of build_gp).
SymPoly gp_m_closed(int r, int s, int t);
SymPoly gp_e_closed(int r, int s, int t);

// Closed-form expansions for the generalized bull, same parameter domain.
SymPoly gb_m_closed(int r, int s, int t);
SymPoly gb_e_closed(int r, int s, int t);

// True iff alpha([N(w)]) <= 2 and every deeper layer induces a clique.
bool has_structural_root_properties(const Graph& g, int w);

/* Least-indexed vertex w of a connected claw-free AT-free graph with
 * alpha([N(w)]) <= 2 and all [N_i(w)], i >= 2, cliques; such a vertex always
 * exists for these graphs. Preconditions are checked (DomainError). When the
 * graph is additionally 2K2-free and unit interval, the returned layering is
 * asserted to satisfy |N_3(w)| <= 1 and N_i(w) empty for i >= 4
 * (InternalError otherwise).
 */
LayerDecomposition find_structural_root(const Graph& g);

// Violated precondition of classify, with the offending vertices.
class ClassificationError : public DomainError {
public:
    ClassificationError(const std::string& predicate, std::vector<int> witness);
    const std::string& predicate() const { return predicate_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    std::string predicate_;
    std::vector<int> witness_;
};

enum class CertificateKind { CoTriangleFree, GeneralizedBull, CaseResolved, Unresolved };
std::string certificate_kind_name(CertificateKind k);

struct GeneralizedBullWitness {
    int r = 0, s = 0, t = 0;
    // mapping[i] is the build_gb vertex assigned to component[i]
    std::vector<int> mapping;
};

/* Per-component classification outcome. All vertex fields use the labels of
 * the graph handed to classify. Structure sets are populated as far as the
 * case that fired defines them; every structural claim is re-validated
 * before the certificate is returned (failures are InternalError, never a
 * silent downgrade).
 */
struct Certificate {
    CertificateKind kind = CertificateKind::Unresolved;
    int case_number = 0; // 1..6; 0 for the single-vertex component shortcut
    std::vector<int> component;
    int root = -1;
    std::vector<std::vector<int>> layers;
    std::optional<int> p, q, x, y;
    std::vector<int> set_a, set_b, set_a1, set_a2, set_a3, set_b1, set_b2;
    bool resolved_via_bull = false; // CaseResolved: which generic certificate fired
    std::optional<GeneralizedBullWitness> bull;
    SymPoly e_expansion{Basis::E, 0};
};

/* Classifies a 2K2-free unit interval graph per connected component.
 * Cases (4) and (6) certify co-triangle-freeness; case (5) certifies either
 * co-triangle-freeness or an explicit generalized-bull isomorphism; cases
 * (1)-(3) carry whichever generic certificate (co-triangle-free test, then
 * a bounded generalized-bull isomorphism search) succeeds, else Unresolved.
 * Precondition failures throw ClassificationError naming the predicate.
 */
std::vector<Certificate> classify(const Graph& g, int census_bound = kDefaultCensusVertexBound);

nlohmann::json certificate_to_json(const Certificate& cert);

struct SweepEntry {
    Family family;
    int r, s, t;
    bool m_match, e_match, e_nonneg;
    long long millis;
};

/* For every 1 <= r,s,t <= max_param, compares the closed-form m- and
 * e-expansions against the census pipeline on the constructed graph and
 * checks e-coefficient nonnegativity. Entries are ordered lexicographically
 * by (r,s,t) regardless of worker scheduling; failures are entries, not
 * errors.
 */
std::vector<SweepEntry> verify_sweep(Family family, int max_param, int workers = 1);

nlohmann::json sweep_to_json(const std::vector<SweepEntry>& entries);

} // namespace cst
