#include "cst/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace cst {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::M: return "M";
        case Basis::MTilde: return "MTILDE";
        case Basis::E: return "E";
    }
    throw InternalError("basis_name: bad enum value");
}

Basis basis_from_name(const std::string& name) {
    if (name == "M") return Basis::M;
    if (name == "MTILDE") return Basis::MTilde;
    if (name == "E") return Basis::E;
    throw ParseError("unknown basis '" + name + "'");
}

std::string basis_tag(Basis b) {
    switch (b) {
        case Basis::M: return "m";
        case Basis::MTilde: return "mt";
        case Basis::E: return "e";
    }
    throw InternalError("basis_tag: bad enum value");
}

SymPoly::SymPoly(Basis basis, int degree) : basis_(basis), degree_(degree) {
    if (degree < 0) throw DomainError("SymPoly degree must be nonnegative");
}

Int SymPoly::coeff(const Partition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Int(0) : it->second;
}

void SymPoly::add_term(const Partition& key, const Int& delta) {
    if (key.weight() != degree_)
        throw DomainError("SymPoly term weight " + std::to_string(key.weight()) +
                          " does not match degree " + std::to_string(degree_));
    if (delta == 0) return;
    auto [it, inserted] = terms_.emplace(key, delta);
    if (!inserted) {
        it->second += delta;
        if (it->second == 0) terms_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
    if (basis_ != other.basis_ || degree_ != other.degree_)
        throw DomainError("SymPoly sum requires matching basis and degree");
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
}

SymPoly& SymPoly::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_) c *= scalar;
    return *this;
}

namespace {

/* One column of the 0/1-matrix count. Rows with equal remaining capacity are
 * interchangeable, so the state is the sorted capacity multiset plus how many
 * columns are already filled; choosing x rows out of a class of k equal
 * capacities contributes binomial(k, x) ways.
 */
class MatrixCountDp {
public:
    explicit MatrixCountDp(const std::vector<int>& cols) : cols_(cols) {}

    Int run(std::vector<int> caps) {
        std::sort(caps.begin(), caps.end(), std::greater<int>());
        return count(std::move(caps), 0);
    }

private:
    Int count(std::vector<int> caps, std::size_t col) {
        while (!caps.empty() && caps.back() == 0) caps.pop_back();
        if (col == cols_.size()) return caps.empty() ? 1 : 0;
        auto key = std::make_pair(std::move(caps), col);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const auto& c = key.first;
        // group equal capacities into classes (value, count)
        std::vector<std::pair<int, int>> classes;
        for (int v : c) {
            if (!classes.empty() && classes.back().first == v)
                ++classes.back().second;
            else
                classes.emplace_back(v, 1);
        }
        Int total = 0;
        std::vector<int> chosen(classes.size(), 0);
        std::function<void(std::size_t, int, Int)> pick = [&](std::size_t ci, int need, Int ways) {
            if (need == 0) {
                std::vector<int> next;
                next.reserve(c.size());
                for (std::size_t i = 0; i < classes.size(); ++i) {
                    for (int j = 0; j < classes[i].second - chosen[i]; ++j)
                        next.push_back(classes[i].first);
                    for (int j = 0; j < chosen[i]; ++j) next.push_back(classes[i].first - 1);
                }
                std::sort(next.begin(), next.end(), std::greater<int>());
                total += ways * count(std::move(next), col + 1);
                return;
            }
            if (ci == classes.size()) return;
            int limit = std::min(need, classes[ci].second);
            for (int x = 0; x <= limit; ++x) {
                chosen[ci] = x;
                pick(ci + 1, need - x, ways * binomial(classes[ci].second, x));
            }
            chosen[ci] = 0;
        };
        pick(0, cols_[col], 1);
        auto [stored, inserted] = memo_.emplace(std::move(key), std::move(total));
        return stored->second;
    }

    const std::vector<int>& cols_;
    std::map<std::pair<std::vector<int>, std::size_t>, Int> memo_;
};

} // namespace

Int count_01_matrices(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw DomainError("count_01_matrices: row and column sums must agree");
    if (lambda.weight() == 0) return 1;
    // a row can hold at most one 1 per column
    if (lambda.parts().front() > mu.part_count()) return 0;
    if (mu.parts().front() > lambda.part_count()) return 0;
    MatrixCountDp dp(mu.parts());
    return dp.run(lambda.parts());
}

std::vector<TransitionEntry> transition_matrix(int n) {
    std::vector<TransitionEntry> out;
    auto parts = partitions_of(n);
    for (const Partition& lambda : parts)
        for (const Partition& mu : parts) {
            Int value = count_01_matrices(lambda, mu);
            if (value != 0) out.push_back({lambda, mu, std::move(value)});
        }
    return out;
}

SymPoly e_to_m(const Partition& lambda) {
    SymPoly out(Basis::M, lambda.weight());
    for (const Partition& mu : partitions_of(lambda.weight())) {
        if (!dominance_leq(lambda, mu.conjugate())) continue; // vanishes
        Int m = count_01_matrices(lambda, mu);
        if (m != 0) out.add_term(mu, m);
    }
    return out;
}

SymPoly sympoly_e_expand(const SymPoly& f) {
    if (f.basis() != Basis::E) throw DomainError("sympoly_e_expand expects basis E");
    SymPoly out(Basis::M, f.degree());
    for (const auto& [lambda, c] : f.terms()) {
        SymPoly expanded = e_to_m(lambda);
        expanded *= c;
        out += expanded;
    }
    return out;
}

SymPoly m_to_e(const SymPoly& f) {
    if (f.basis() != Basis::M) throw DomainError("m_to_e expects basis M");
    const int n = f.degree();
    // Back-substitution order: reverse-lexicographic on conjugates. Any kappa
    // strictly dominated by lambda has conjugate strictly above lambda's, so
    // by the time lambda is processed its residual coefficient at lambda' is
    // final and equals the E-basis coefficient of lambda.
    std::vector<Partition> order = partitions_of(n);
    std::sort(order.begin(), order.end(), [](const Partition& a, const Partition& b) {
        return canonical_less(a.conjugate(), b.conjugate());
    });

    SymPoly residual = f;
    SymPoly out(Basis::E, n);
    for (const Partition& lambda : order) {
        Int c = residual.coeff(lambda.conjugate());
        if (c == 0) continue;
        out.add_term(lambda, c);
        SymPoly expanded = e_to_m(lambda);
        expanded *= -c;
        residual += expanded;
    }
    if (!residual.is_zero())
        throw InternalError("m_to_e: elimination left a nonzero residual");
    return out;
}

SymPoly mtilde_to_m(const SymPoly& f) {
    if (f.basis() != Basis::MTilde) throw DomainError("mtilde_to_m expects basis MTILDE");
    SymPoly out(Basis::M, f.degree());
    for (const auto& [key, c] : f.terms()) out.add_term(key, c * multiplicity_product(key));
    return out;
}

SymPoly m_to_mtilde(const SymPoly& f) {
    if (f.basis() != Basis::M) throw DomainError("m_to_mtilde expects basis M");
    SymPoly out(Basis::MTilde, f.degree());
    for (const auto& [key, c] : f.terms()) {
        Int scale = multiplicity_product(key);
        if (c % scale != 0)
            throw DomainError("m_to_mtilde: coefficient of " + to_plus_string(key) +
                              " is not divisible by " + scale.str());
        out.add_term(key, c / scale);
    }
    return out;
}

SymPoly multiply_e(const SymPoly& f, const SymPoly& g) {
    if (f.basis() != Basis::E || g.basis() != Basis::E)
        throw DomainError("multiply_e expects both factors in basis E");
    SymPoly out(Basis::E, f.degree() + g.degree());
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            std::vector<int> merged = a.parts();
            merged.insert(merged.end(), b.parts().begin(), b.parts().end());
            out.add_term(Partition(std::move(merged)), ca * cb);
        }
    }
    return out;
}

std::string to_string(const SymPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& [key, c] : f.terms()) {
        Int mag = c;
        if (s.empty()) {
            if (c < 0) {
                s += "-";
                mag = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) mag = -c;
        }
        s += mag.str() + "·" + basis_tag(f.basis()) + "[";
        for (std::size_t i = 0; i < key.parts().size(); ++i) {
            if (i) s += ',';
            s += std::to_string(key.parts()[i]);
        }
        s += "]";
    }
    return s;
}

nlohmann::json sympoly_to_json(const SymPoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : f.terms()) {
        terms.push_back({{"partition", key.parts()}, {"coeff", c.str()}});
    }
    return {{"basis", basis_name(f.basis())}, {"degree", f.degree()}, {"terms", terms}};
}

SymPoly sympoly_from_json(const nlohmann::json& j) {
    try {
        SymPoly out(basis_from_name(j.at("basis").get<std::string>()), j.at("degree").get<int>());
        for (const auto& term : j.at("terms")) {
            Partition key(term.at("partition").get<std::vector<int>>());
            out.add_term(key, Int(term.at("coeff").get<std::string>()));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad SymPoly JSON: ") + e.what());
    }
}

} // namespace cst
