#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "cst/partition.hpp"

namespace cst {

enum class Basis { M, MTilde, E };

std::string basis_name(Basis b);       // "M" | "MTILDE" | "E"
Basis basis_from_name(const std::string& name);
std::string basis_tag(Basis b);        // "m" | "mt" | "e" (text rendering)

/* A homogeneous symmetric function of fixed degree, stored as a basis tag
 * plus an exact-integer coefficient map. Zero coefficients are never stored,
 * so operator== is canonical equality. Key iteration follows the canonical
 * partition order.
 */
class SymPoly {
public:
    using TermMap = std::map<Partition, Int, PartitionOrder>;

    SymPoly(Basis basis, int degree);

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Partition& key) const;
    // Adds delta at key, erasing the entry if it cancels to zero.
    // Keys of the wrong weight throw DomainError.
    void add_term(const Partition& key, const Int& delta);

    SymPoly& operator+=(const SymPoly& other);      // same basis and degree
    SymPoly& operator*=(const Int& scalar);

    bool operator==(const SymPoly& other) const = default;

private:
    Basis basis_;
    int degree_;
    TermMap terms_;
};

/* Transition count M_{lambda,mu}: the number of 0/1 matrices with row-sum
 * vector lambda and column-sum vector mu. Exact; computed by a column-by-
 * column dynamic program over the multiset of remaining row capacities.
 * M_{lambda,mu} = 0 unless lambda <= mu' in dominance, and M_{lambda,
 * lambda'} = 1.
 */
Int count_01_matrices(const Partition& lambda, const Partition& mu);

// One nonzero cell of the elementary-to-monomial transition matrix.
struct TransitionEntry {
    Partition row; // lambda
    Partition col; // mu
    Int value;     // M_{lambda,mu} > 0
};

// All nonzero transition entries for degree n, rows and columns in canonical
// partition order.
std::vector<TransitionEntry> transition_matrix(int n);

// Monomial expansion of the elementary symmetric function e_lambda.
SymPoly e_to_m(const Partition& lambda);

// Linear extension of e_to_m to whole polynomials in the E basis.
SymPoly sympoly_e_expand(const SymPoly& f);

// Inverse of sympoly_e_expand: the (always integral) E-basis expansion of an
// M-basis polynomial, by back-substitution along a linear extension of the
// dominance relation underlying the transition counts.
SymPoly m_to_e(const SymPoly& f);

// Coefficient-wise scaling between the augmented and plain monomial bases.
// m_to_mtilde throws DomainError when a coefficient is not divisible by the
// multiplicity product of its key.
SymPoly mtilde_to_m(const SymPoly& f);
SymPoly m_to_mtilde(const SymPoly& f);

// Bilinear product in the E basis; key pairs land on the merged-and-sorted
// part multiset.
SymPoly multiply_e(const SymPoly& f, const SymPoly& g);

// "6·e[3]", "2·e[3,1,1] + 2·e[3,2] + ...", "0" for the zero polynomial.
std::string to_string(const SymPoly& f);

// {"basis":"E","degree":6,"terms":[{"partition":[4,1,1],"coeff":"6"},...]}
// with coefficients as decimal strings and terms in canonical order.
nlohmann::json sympoly_to_json(const SymPoly& f);
SymPoly sympoly_from_json(const nlohmann::json& j);

} // namespace cst
