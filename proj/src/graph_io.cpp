#include "cst/graph_io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace cst {

namespace {

// strip comments and surrounding whitespace; empty result means "skip line"
std::string clean_line(const std::string& raw) {
    std::string line = raw.substr(0, raw.find('#'));
    auto begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = line.find_last_not_of(" \t\r\n");
    return line.substr(begin, end - begin + 1);
}

bool is_integer_line(const std::string& line) {
    if (line.empty()) return false;
    for (char c : line)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::string raw;
    int lineno = 0;
    int n = -1;
    Graph g;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!is_integer_line(line))
                throw ParseError("expected vertex count, got '" + line + "'", lineno);
            fields >> n;
            if (fields.fail() || n < 0) throw ParseError("bad vertex count", lineno);
            g = Graph(n);
            continue;
        }
        long long u = -1, v = -1;
        fields >> u >> v;
        std::string trailing;
        if (fields.fail() || (fields >> trailing))
            throw ParseError("expected 'u v', got '" + line + "'", lineno);
        if (u < 0 || v < 0 || v >= n || u >= v)
            throw ParseError("edge must satisfy 0 <= u < v < n, got '" + line + "'", lineno);
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("duplicate edge '" + line + "'", lineno);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("no vertex count found", lineno);
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v)) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

namespace {

constexpr int kGraph6Bias = 63;

int graph6_byte(const std::string& s, std::size_t i) {
    if (i >= s.size()) throw ParseError("graph6 string truncated");
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
        throw ParseError("graph6 byte out of range at position " + std::to_string(i));
    return c - kGraph6Bias;
}

} // namespace

Graph parse_graph6(const std::string& raw) {
    std::string s = clean_line(raw);
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    if (s.empty()) throw ParseError("empty graph6 string");

    std::size_t pos = 0;
    long long n;
    if (graph6_byte(s, 0) < 63) {
        n = graph6_byte(s, 0);
        pos = 1;
    } else {
        if (s.size() < 4) throw ParseError("graph6 string truncated");
        if (graph6_byte(s, 1) == 63)
            throw ParseError("graph6 sizes beyond 18 bits are not supported");
        n = (static_cast<long long>(graph6_byte(s, 1)) << 12) |
            (static_cast<long long>(graph6_byte(s, 2)) << 6) | graph6_byte(s, 3);
        pos = 4;
    }
    if (n > 4096) throw BoundError("graph6 input too large (n > 4096)");

    Graph g(static_cast<int>(n));
    const long long bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos != need)
        throw ParseError("graph6 body has " + std::to_string(s.size() - pos) +
                         " bytes, expected " + std::to_string(need));
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = graph6_byte(s, pos + static_cast<std::size_t>(bit / 6));
            if (byte >> (5 - bit % 6) & 1) g.add_edge(u, v);
        }
    }
    // trailing padding bits must be zero
    for (long long b = bits; b < static_cast<long long>(need) * 6; ++b) {
        int byte = graph6_byte(s, pos + static_cast<std::size_t>(b / 6));
        if (byte >> (5 - b % 6) & 1) throw ParseError("graph6 padding bits must be zero");
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + kGraph6Bias);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(((n >> 12) & 63) + kGraph6Bias);
        out += static_cast<char>(((n >> 6) & 63) + kGraph6Bias);
        out += static_cast<char>((n & 63) + kGraph6Bias);
    }
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = acc << 1 | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + kGraph6Bias);
                acc = filled = 0;
            }
        }
    }
    if (filled) out += static_cast<char>((acc << (6 - filled)) + kGraph6Bias);
    return out;
}

Graph parse_graph_auto(std::istream& in) {
    std::string text(std::istreambuf_iterator<char>(in), {});
    std::istringstream scan(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(scan, raw)) {
        ++lineno;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        if (is_integer_line(line)) {
            std::istringstream replay(text);
            return parse_edge_list(replay); // line numbers stay file-relative
        }
        try {
            return parse_graph6(line);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    throw ParseError("no graph found in input", lineno);
}

} // namespace cst
