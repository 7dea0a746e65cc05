#include "cst/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace cst {

std::string family_name(Family f) { return f == Family::GP ? "gp" : "gb"; }

namespace {

void require_positive(int r, int s, int t, const char* fn) {
    if (r < 1 || s < 1 || t < 1)
        throw DomainError(std::string(fn) +
                          ": closed forms assume positive r,s,t; route zero parameters "
                          "through the brute-force pipeline on the constructed graph");
}

// (head..., 1^ones) as a partition
Partition with_ones(std::vector<int> head, int ones) {
    head.insert(head.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(head));
}

} // namespace

SymPoly gp_m_closed(int r, int s, int t) {
    require_positive(r, s, t, "gp_m_closed");
    const int i = r + s + t;
    SymPoly mt(Basis::MTilde, i + 3);
    mt.add_term(with_ones({3}, i), 1);
    mt.add_term(with_ones({2, 2, 2}, i - 3), Int(r) * s * t);
    mt.add_term(with_ones({2, 2}, i - 1), Int(r) * t + Int(r) * s + Int(s) * t + r + s + t);
    mt.add_term(with_ones({2}, i + 1), r + s + t + 3);
    mt.add_term(with_ones({}, i + 3), 1);
    return mtilde_to_m(mt);
}

std::array<Int, 3> gp_c_groups(int r_, int s_, int t_) {
    Int r = r_, s = s_, t = t_;
    return {r * r * s + r * s * s - 2 * r * s,
            r * t * t + r * r * t - 2 * r * t,
            s * s * t + s * t * t - 2 * s * t};
}

std::vector<Int> gp_d_groups(int r_, int s_, int t_) {
    Int r = r_, s = s_, t = t_;
    return {
        r * r * r * r + r * r * r - 2 * r * r,
        3 * r * r * s - 2 * r * s,
        3 * r * s * s - 2 * s * s,
        3 * r * r * t - 2 * r * t,
        9 * r * s * t - 2 * s * t,
        3 * r * t * t - 2 * t * t,
        3 * s * s * t,
        5 * r * s * s * t,
        2 * s * s * s * t,
        5 * r * r * s * t,
        2 * r * r * r * t,
        2 * r * r * t * t,
        3 * s * t * t,
        5 * r * s * t * t,
        2 * s * s * t * t,
        t * t * t,
        2 * r * t * t * t,
        2 * s * t * t * t,
        t * t * t * t,
        2 * r * r * r * s,
        2 * r * r * s * s,
        s * s * s,
        2 * r * s * s * s,
        s * s * s * s,
    };
}

GPCoefficients gp_coefficients(int r, int s, int t) {
    require_positive(r, s, t, "gp_coefficients");
    const int i = r + s + t;
    GPCoefficients out{r, s, t, 0, 0, 0, 0, 0};
    out.A = factorial(i);
    out.B = factorial(i - 3) * 6 * r * s * t;
    auto cg = gp_c_groups(r, s, t);
    out.C = factorial(i - 3) * 2 * (i - 1) * (cg[0] + cg[1] + cg[2]);
    Int dsum = 0;
    for (const Int& g : gp_d_groups(r, s, t)) dsum += g;
    out.D = factorial(i - 2) * dsum;
    out.E = factorial(i - 1) * (3 + i) * (Int(r) + s) * (Int(r) + t) * (Int(s) + t);
    return out;
}

SymPoly gp_e_closed(int r, int s, int t) {
    GPCoefficients c = gp_coefficients(r, s, t);
    const int i = r + s + t;
    SymPoly out(Basis::E, i + 3);
    out.add_term(Partition({i + 1, 1, 1}), c.A);
    out.add_term(Partition({i, 3}), c.B);
    out.add_term(Partition({i + 1, 2}), c.C);
    out.add_term(Partition({i + 2, 1}), c.D);
    out.add_term(Partition({i + 3}), c.E);
    return out;
}

SymPoly gb_m_closed(int r, int s, int t) {
    require_positive(r, s, t, "gb_m_closed");
    const int k = r + s + t;
    SymPoly mt(Basis::MTilde, k + 2);
    mt.add_term(with_ones({3}, k - 1), t);
    mt.add_term(with_ones({2, 2}, k - 2), Int(t) * (t - 1) + Int(t) * r + Int(s) * r + Int(s) * t);
    mt.add_term(with_ones({2}, k), 1 + 2 * t + s + r);
    mt.add_term(with_ones({}, k + 2), 1);
    return mtilde_to_m(mt);
}

SymPoly gb_e_closed(int r_, int s_, int t_) {
    require_positive(r_, s_, t_, "gb_e_closed");
    const int k = r_ + s_ + t_;
    Int r = r_, s = s_, t = t_;
    const Int scale = factorial(k - 2);
    SymPoly out(Basis::E, k + 2);
    out.add_term(Partition({k, 1, 1}), scale * (k - 1) * t);
    out.add_term(Partition({k, 2}), scale * 2 * r * s);
    out.add_term(Partition({k + 1, 1}),
                 scale * (r * r * r + r * r * s + r * s * s + s * s * s + 2 * r * r * t +
                          2 * r * s * t + 2 * s * s * t + r * t * t + s * t * t - r - s));
    out.add_term(Partition({k + 2}), scale * (k + 2) * (k - 1) * r * s);
    return out;
}

namespace {

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

} // namespace

bool has_structural_root_properties(const Graph& g, int w) {
    auto layers = distance_layers(g, w);
    if (layers.layers.size() >= 2 &&
        max_stable_set_size(induced_subgraph(g, layers.layers[1])) > 2)
        return false;
    for (std::size_t i = 2; i < layers.layers.size(); ++i)
        if (!is_clique(g, layers.layers[i])) return false;
    return true;
}

LayerDecomposition find_structural_root(const Graph& g) {
    if (!is_connected(g)) throw DomainError("find_structural_root: graph must be connected");
    if (auto claw = find_induced(g, build_pattern("claw")))
        throw DomainError("find_structural_root: graph contains an induced claw");
    if (auto at = find_asteroidal_triple(g))
        throw DomainError("find_structural_root: graph contains an asteroidal triple");

    const bool two_k2_free_ui =
        !find_induced(g, build_pattern("2K2")).has_value() && is_unit_interval(g);
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (!has_structural_root_properties(g, w)) continue;
        auto layers = distance_layers(g, w);
        if (two_k2_free_ui) {
            // consequences of 2K2-freeness for this layering
            if (layers.layers.size() > 4)
                throw InternalError("structural root has nonempty N_i for some i >= 4");
            if (layers.layers.size() == 4 && layers.layers[3].size() > 1)
                throw InternalError("structural root has |N_3| > 1");
        }
        return layers;
    }
    throw InternalError("no structural root found in a connected claw-free AT-free graph");
}

ClassificationError::ClassificationError(const std::string& predicate, std::vector<int> witness)
    : DomainError("classification precondition failed: graph is not " + predicate),
      predicate_(predicate),
      witness_(std::move(witness)) {}

std::string certificate_kind_name(CertificateKind k) {
    switch (k) {
        case CertificateKind::CoTriangleFree: return "co-triangle-free";
        case CertificateKind::GeneralizedBull: return "generalized-bull";
        case CertificateKind::CaseResolved: return "case-resolved";
        case CertificateKind::Unresolved: return "unresolved";
    }
    throw InternalError("certificate_kind_name: bad enum value");
}

namespace {

std::vector<int> sorted_neighbors_within(const Graph& g, int v, const std::vector<int>& pool) {
    std::vector<int> out;
    for (int u : pool)
        if (u != v && g.adjacent(v, u)) out.push_back(u);
    return out;
}

void require_no_co_triangle(const Graph& g, const char* context) {
    if (auto triple = find_co_triangle(g))
        throw InternalError(std::string("certificate re-validation failed (") + context +
                            "): stable triple {" + std::to_string((*triple)[0]) + "," +
                            std::to_string((*triple)[1]) + "," + std::to_string((*triple)[2]) +
                            "}");
}

void require_clique(const Graph& g, const std::vector<int>& vertices, const char* what) {
    if (!is_clique(g, vertices))
        throw InternalError(std::string("certificate re-validation failed: ") + what +
                            " is not a clique");
}

// Exact edge-preserving bijection check of mapping (local vertex -> gb vertex).
void require_gb_isomorphism(const Graph& g, const Graph& gb, const std::vector<int>& mapping) {
    const int n = g.vertex_count();
    if (gb.vertex_count() != n || static_cast<int>(mapping.size()) != n)
        throw InternalError("generalized-bull mapping has wrong size");
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int v : mapping) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)])
            throw InternalError("generalized-bull mapping is not a bijection");
        hit[static_cast<std::size_t>(v)] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != gb.adjacent(mapping[u], mapping[v]))
                throw InternalError("generalized-bull mapping does not preserve adjacency");
}

// Case (5) forces on every a in A: at most one vertex of B is missed, and
// the B-neighborhood induces a clique.
void require_case5_neighborhood_shape(const Graph& g, const std::vector<int>& set_a,
                                      const std::vector<int>& set_b) {
    for (int a : set_a) {
        auto nb = sorted_neighbors_within(g, a, set_b);
        if (nb.size() + 1 < set_b.size())
            throw InternalError("case 5 re-validation failed: vertex " + std::to_string(a) +
                                " misses more than one vertex of B");
        require_clique(g, nb, "a B-neighborhood in case 5");
    }
}

Certificate classify_component(const Graph& sub, int census_bound) {
    Certificate cert;
    cert.e_expansion = csf_e(sub, census_bound);
    const int n = sub.vertex_count();
    cert.component.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) cert.component[static_cast<std::size_t>(v)] = v;

    if (n == 1) {
        cert.kind = CertificateKind::CoTriangleFree;
        cert.case_number = 0;
        cert.root = 0;
        cert.layers = {{0}};
        return cert;
    }

    LayerDecomposition layers = find_structural_root(sub);
    cert.root = layers.root;
    cert.layers = layers.layers;
    auto layer = [&](std::size_t i) {
        return i < layers.layers.size() ? layers.layers[i] : std::vector<int>{};
    };
    const std::vector<int> n1 = layer(1), n2 = layer(2), n3 = layer(3);
    const Graph n1_graph = induced_subgraph(sub, n1);
    const bool n1_connected = is_connected(n1_graph);
    const int alpha1 = max_stable_set_size(n1_graph);

    if (!n1_connected)
        cert.case_number = 1;
    else if (n3.size() == 1)
        cert.case_number = 2;
    else if (n3.empty() && alpha1 == 1)
        cert.case_number = 3;
    else if (n3.empty() && alpha1 == 2 && n2.size() == 2)
        cert.case_number = 4;
    else if (n3.empty() && alpha1 == 2 && n2.size() == 1)
        cert.case_number = 5;
    else if (n3.empty() && alpha1 == 2 && n2.empty())
        cert.case_number = 6;
    else
        throw InternalError("layer profile escapes the six-case analysis (|N2|=" +
                            std::to_string(n2.size()) + ", |N3|=" + std::to_string(n3.size()) +
                            ", alpha=" + std::to_string(alpha1) + ")");

    switch (cert.case_number) {
        case 4: {
            cert.p = n2[0];
            cert.q = n2[1];
            cert.set_a = sorted_neighbors_within(sub, *cert.p, n1);
            for (int v : n1)
                if (!std::binary_search(cert.set_a.begin(), cert.set_a.end(), v))
                    cert.set_b.push_back(v);
            require_clique(sub, cert.set_a, "A");
            require_clique(sub, cert.set_b, "B");
            for (int b : cert.set_b)
                if (!sub.adjacent(*cert.q, b))
                    throw InternalError("case 4 re-validation failed: q misses a vertex of B");
            require_no_co_triangle(sub, "case 4");
            cert.kind = CertificateKind::CoTriangleFree;
            return cert;
        }
        case 5: {
            cert.p = n2[0];
            cert.set_a = sorted_neighbors_within(sub, *cert.p, n1);
            for (int v : n1)
                if (!std::binary_search(cert.set_a.begin(), cert.set_a.end(), v))
                    cert.set_b.push_back(v);
            require_clique(sub, cert.set_a, "A");
            require_case5_neighborhood_shape(sub, cert.set_a, cert.set_b);

            if (is_clique(sub, cert.set_b)) {
                require_no_co_triangle(sub, "case 5, clique B");
                cert.kind = CertificateKind::CoTriangleFree;
                return cert;
            }
            // first non-adjacent pair of B in lexicographic order
            int x = -1, y = -1;
            for (std::size_t i = 0; i < cert.set_b.size() && x < 0; ++i)
                for (std::size_t j = i + 1; j < cert.set_b.size(); ++j)
                    if (!sub.adjacent(cert.set_b[i], cert.set_b[j])) {
                        x = cert.set_b[i];
                        y = cert.set_b[j];
                        break;
                    }
            auto a_neighbors_of = [&](int v) { return sorted_neighbors_within(sub, v, cert.set_a); };
            std::vector<int> a1 = a_neighbors_of(x), a2 = a_neighbors_of(y);
            if (!a1.empty() && !a2.empty())
                throw InternalError(
                    "case 5 re-validation failed: both pendant candidates meet A "
                    "(an asteroidal triple should have been caught upstream)");
            if (!a1.empty()) {
                std::swap(x, y); // relabel so x is the vertex with no A-neighbors
                std::swap(a1, a2);
            }
            cert.x = x;
            cert.y = y;
            cert.set_a1 = a1;
            cert.set_a2 = a2;
            for (int v : cert.set_b)
                if (v != x && v != y) cert.set_a3.push_back(v);

            std::vector<int> rest; // N(w) minus x, with w: the big clique of the bull
            for (int v : n1)
                if (v != x) rest.push_back(v);
            rest.push_back(layers.root);
            require_clique(sub, rest, "N(w) \\ {x} plus w");

            cert.set_b1 = sorted_neighbors_within(sub, x, cert.set_b);
            for (int v : cert.set_b)
                if (v != x && !std::binary_search(cert.set_b1.begin(), cert.set_b1.end(), v))
                    cert.set_b2.push_back(v);

            const int r = static_cast<int>(cert.set_a.size());
            const int s = static_cast<int>(cert.set_b1.size()) + 1;
            const int t = static_cast<int>(cert.set_b2.size());
            GeneralizedBullWitness bull;
            bull.r = r;
            bull.s = s;
            bull.t = t;
            bull.mapping.assign(static_cast<std::size_t>(n), -1);
            bull.mapping[static_cast<std::size_t>(*cert.p)] = 0;
            bull.mapping[static_cast<std::size_t>(x)] = 1;
            int next = 2;
            for (int v : cert.set_a) bull.mapping[static_cast<std::size_t>(v)] = next++;
            std::vector<int> ks = cert.set_b1;
            ks.push_back(layers.root);
            std::sort(ks.begin(), ks.end());
            for (int v : ks) bull.mapping[static_cast<std::size_t>(v)] = next++;
            for (int v : cert.set_b2) bull.mapping[static_cast<std::size_t>(v)] = next++;
            require_gb_isomorphism(sub, build_gb(r, s, t), bull.mapping);
            cert.bull = std::move(bull);
            cert.kind = CertificateKind::GeneralizedBull;
            return cert;
        }
        case 6: {
            require_no_co_triangle(sub, "case 6");
            cert.kind = CertificateKind::CoTriangleFree;
            return cert;
        }
        default: { // cases 1-3: the generic certificates
            if (!find_co_triangle(sub)) {
                cert.kind = CertificateKind::CaseResolved;
                cert.resolved_via_bull = false;
                return cert;
            }
            if (n <= 14) {
                for (int r = 0; r <= n - 2; ++r) {
                    for (int s = 0; r + s <= n - 2; ++s) {
                        const int t = n - 2 - r - s;
                        auto iso = find_isomorphism(sub, build_gb(r, s, t));
                        if (!iso) continue;
                        GeneralizedBullWitness bull{r, s, t, *iso};
                        require_gb_isomorphism(sub, build_gb(r, s, t), bull.mapping);
                        cert.bull = std::move(bull);
                        cert.kind = CertificateKind::CaseResolved;
                        cert.resolved_via_bull = true;
                        return cert;
                    }
                }
            }
            cert.kind = CertificateKind::Unresolved;
            return cert;
        }
    }
}

void relabel(Certificate& cert, const std::vector<int>& labels) {
    auto map_vertex = [&](int v) { return labels[static_cast<std::size_t>(v)]; };
    auto map_all = [&](std::vector<int>& vs) {
        for (int& v : vs) v = map_vertex(v);
    };
    map_all(cert.component);
    if (cert.root >= 0) cert.root = map_vertex(cert.root);
    for (auto& layer : cert.layers) map_all(layer);
    for (auto* opt : {&cert.p, &cert.q, &cert.x, &cert.y})
        if (*opt) *opt = map_vertex(**opt);
    map_all(cert.set_a);
    map_all(cert.set_b);
    map_all(cert.set_a1);
    map_all(cert.set_a2);
    map_all(cert.set_a3);
    map_all(cert.set_b1);
    map_all(cert.set_b2);
    // bull.mapping stays parallel to cert.component; nothing to translate
}

} // namespace

std::vector<Certificate> classify(const Graph& g, int census_bound) {
    if (auto w = find_induced(g, build_pattern("2K2")))
        throw ClassificationError("2K2-free", *w);
    if (auto w = find_induced(g, build_pattern("claw"))) throw ClassificationError("claw-free", *w);
    if (!is_chordal(g)) {
        auto cycle = find_induced_long_cycle(g);
        throw ClassificationError("chordal", cycle ? *cycle : std::vector<int>{});
    }
    if (auto at = find_asteroidal_triple(g))
        throw ClassificationError("AT-free", {(*at)[0], (*at)[1], (*at)[2]});

    std::vector<Certificate> out;
    for (const auto& comp : component_vertex_sets(g)) {
        Certificate cert = classify_component(induced_subgraph(g, comp), census_bound);
        relabel(cert, comp);
        out.push_back(std::move(cert));
    }
    return out;
}

nlohmann::json certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["kind"] = certificate_kind_name(cert.kind);
    j["case"] = cert.case_number;
    j["component"] = cert.component;
    j["root"] = cert.root;
    j["layers"] = cert.layers;
    auto put_vertex = [&](const char* name, const std::optional<int>& v) {
        if (v) j[name] = *v;
    };
    put_vertex("p", cert.p);
    put_vertex("q", cert.q);
    put_vertex("x", cert.x);
    put_vertex("y", cert.y);
    auto put_set = [&](const char* name, const std::vector<int>& vs) {
        if (!vs.empty()) j[name] = vs;
    };
    put_set("A", cert.set_a);
    put_set("B", cert.set_b);
    put_set("A1", cert.set_a1);
    put_set("A2", cert.set_a2);
    put_set("A3", cert.set_a3);
    put_set("B1", cert.set_b1);
    put_set("B2", cert.set_b2);
    if (cert.kind == CertificateKind::CaseResolved)
        j["resolved_via"] = cert.resolved_via_bull ? "generalized-bull" : "co-triangle-free";
    if (cert.bull) {
        j["gb"] = {{"r", cert.bull->r},
                   {"s", cert.bull->s},
                   {"t", cert.bull->t},
                   {"mapping", cert.bull->mapping}};
    }
    j["e_expansion"] = sympoly_to_json(cert.e_expansion);
    return j;
}

std::vector<SweepEntry> verify_sweep(Family family, int max_param, int workers) {
    if (max_param < 1) throw DomainError("verify_sweep: max_param must be >= 1");
    if (workers < 1) throw DomainError("verify_sweep: worker count must be >= 1");

    std::vector<std::array<int, 3>> triples;
    for (int r = 1; r <= max_param; ++r)
        for (int s = 1; s <= max_param; ++s)
            for (int t = 1; t <= max_param; ++t) triples.push_back({r, s, t});

    std::vector<SweepEntry> entries(triples.size());
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto run = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= triples.size()) return;
            auto [r, s, t] = triples[i];
            try {
                auto start = std::chrono::steady_clock::now();
                Graph g = family == Family::GP ? build_gp(r, s, t) : build_gb(r, s, t);
                SymPoly closed_m =
                    family == Family::GP ? gp_m_closed(r, s, t) : gb_m_closed(r, s, t);
                SymPoly closed_e =
                    family == Family::GP ? gp_e_closed(r, s, t) : gb_e_closed(r, s, t);
                SymPoly brute_m = csf_m(g);
                SymPoly brute_e = m_to_e(brute_m);
                bool nonneg = true;
                for (const auto& [key, c] : closed_e.terms())
                    if (c < 0) nonneg = false;
                auto stop = std::chrono::steady_clock::now();
                entries[i] = {family,
                              r,
                              s,
                              t,
                              closed_m == brute_m,
                              closed_e == brute_e,
                              nonneg,
                              std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
                                  .count()};
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return entries;
}

nlohmann::json sweep_to_json(const std::vector<SweepEntry>& entries) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries) {
        out.push_back({{"family", family_name(e.family)},
                       {"r", e.r},
                       {"s", e.s},
                       {"t", e.t},
                       {"m_match", e.m_match},
                       {"e_match", e.e_match},
                       {"e_nonneg", e.e_nonneg},
                       {"millis", e.millis}});
    }
    return out;
}

} // namespace cst
