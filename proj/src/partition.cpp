#include "cst/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace cst {

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // exact: r is a running binomial
    }
    return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 0) throw DomainError("partition parts must be nonnegative");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()));
    for (int i = 1; i <= parts_.front(); ++i) {
        conj[static_cast<std::size_t>(i) - 1] = static_cast<int>(
            std::count_if(parts_.begin(), parts_.end(), [i](int p) { return p >= i; }));
    }
    return Partition(std::move(conj));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
    std::vector<std::pair<int, int>> out;
    // parts_ is descending, so walk it backwards to emit ascending values
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
        if (!out.empty() && out.back().first == *it)
            ++out.back().second;
        else
            out.emplace_back(*it, 1);
    }
    return out;
}

bool canonical_less(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw DomainError("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> stack;
    // descending first parts give reverse-lexicographic order directly
    std::function<void(int, int)> rec = [&](int rem, int max_part) {
        if (rem == 0) {
            out.emplace_back(stack);
            return;
        }
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            stack.push_back(p);
            rec(rem - p, p);
            stack.pop_back();
        }
    };
    rec(n, n);
    return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw DomainError("dominance_leq: partitions must have equal weight");
    long long pm = 0, pl = 0;
    std::size_t k = std::max(mu.parts().size(), lambda.parts().size());
    for (std::size_t i = 0; i < k; ++i) {
        pm += i < mu.parts().size() ? mu.parts()[i] : 0;
        pl += i < lambda.parts().size() ? lambda.parts()[i] : 0;
        if (pm > pl) return false;
    }
    return true;
}

Int multiplicity_product(const Partition& p) {
    Int r = 1;
    for (auto [part, count] : p.multiplicities()) r *= factorial(count);
    return r;
}

std::string to_plus_string(const Partition& p) {
    if (p.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += '+';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

std::string to_multiplicity_string(const Partition& p) {
    std::string s = "<";
    bool first = true;
    for (auto [part, count] : p.multiplicities()) {
        if (!first) s += ' ';
        first = false;
        s += std::to_string(part) + "^" + std::to_string(count);
    }
    return s + ">";
}

namespace {

int parse_int_token(std::string_view tok, std::string_view what) {
    if (tok.empty()) throw ParseError(std::string("empty number in ") + std::string(what));
    int value = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad character '" + std::string(1, c) + "' in " + std::string(what));
        value = value * 10 + (c - '0');
        if (value > 1'000'000) throw ParseError("number too large in " + std::string(what));
    }
    return value;
}

Partition parse_multiplicity_form(std::string_view text) {
    if (text.size() < 2 || text.front() != '<' || text.back() != '>')
        throw ParseError("multiplicity form must be wrapped in <>");
    std::vector<int> parts;
    std::istringstream in{std::string(text.substr(1, text.size() - 2))};
    std::string tok;
    while (in >> tok) {
        auto caret = tok.find('^');
        if (caret == std::string::npos)
            throw ParseError("expected part^count, got '" + tok + "'");
        int part = parse_int_token(std::string_view(tok).substr(0, caret), "partition");
        int count = parse_int_token(std::string_view(tok).substr(caret + 1), "partition");
        if (part <= 0 || count <= 0)
            throw ParseError("parts and multiplicities must be positive");
        for (int i = 0; i < count; ++i) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

} // namespace

Partition parse_partition(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty partition text");
    if (text.front() == '<') return parse_multiplicity_form(text);
    if (text == "0") return {};
    std::vector<int> parts;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        auto plus = text.find('+', begin);
        auto tok = text.substr(begin, plus == std::string_view::npos ? std::string_view::npos
                                                                     : plus - begin);
        int part = parse_int_token(tok, "partition");
        if (part <= 0) throw ParseError("partition parts must be positive");
        parts.push_back(part);
        if (plus == std::string_view::npos) break;
        begin = plus + 1;
    }
    return Partition(std::move(parts));
}

} // namespace cst
