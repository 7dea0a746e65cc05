#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cst/common.hpp"

namespace cst {

/* An integer partition: a weakly decreasing sequence of positive parts.
 * Immutable value type. The empty partition (weight 0) is legal and acts as
 * the multiplicative identity carrier for symmetric-function products.
 *
 * The canonical total order used everywhere (list generation, coefficient-map
 * iteration, witness tie-breaking) is reverse-lexicographic on the part
 * sequences: (n) first, (1^n) last within a fixed weight.
 */
class Partition {
public:
    Partition() = default;

    // Normalizes: sorts descending, drops zero parts. Negative parts rejected.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int part_count() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    // Multiplicity view: pairs (part value, multiplicity), ascending by value.
    std::vector<std::pair<int, int>> multiplicities() const;

    bool operator==(const Partition& other) const = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Canonical order: true iff a precedes b (reverse-lexicographic; across
// weights, smaller weight first so maps of mixed degree stay deterministic).
bool canonical_less(const Partition& a, const Partition& b);

// Comparator for ordered containers keyed by Partition.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        return canonical_less(a, b);
    }
};

// Every partition of n exactly once, in canonical order. partitions_of(0)
// is the singleton list holding the empty partition.
std::vector<Partition> partitions_of(int n);

// Dominance: mu <= lambda iff every prefix sum of mu is at most the matching
// prefix sum of lambda (zero-padded). Only defined within a fixed weight;
// unequal weights throw DomainError.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// r1! r2! ... where r_i is the number of parts equal to i; the scalar
// relating the augmented monomial basis to the plain one.
Int multiplicity_product(const Partition& p);

// "3+2+1" (empty renders as "0").
std::string to_plus_string(const Partition& p);
// "<1^1 2^1 3^1>" ascending by part value (empty renders as "<>").
std::string to_multiplicity_string(const Partition& p);
// Accepts either rendering; throws ParseError on malformed input.
Partition parse_partition(std::string_view text);

} // namespace cst
