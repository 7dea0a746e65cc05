#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "cst/theorems.hpp"
#include "test_util.hpp"

using cst::Basis;
using cst::Certificate;
using cst::CertificateKind;
using cst::Graph;
using cst::Int;
using cst::Partition;
using cst::SymPoly;

namespace {

Partition p(std::vector<int> parts) { return Partition(std::move(parts)); }

SymPoly make(Basis basis, int degree, std::vector<std::pair<std::vector<int>, Int>> terms) {
    SymPoly out(basis, degree);
    for (auto& [key, c] : terms) out.add_term(Partition(key), c);
    return out;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v))
                out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

// external re-validation of a certificate, independent of the classifier's
// own tripwires
void revalidate(const Graph& g, const Certificate& cert) {
    Graph comp = cst::induced_subgraph(g, cert.component);
    CHECK(cert.e_expansion == cst::csf_e(comp));
    for (const auto& [key, c] : cert.e_expansion.terms()) CHECK(c >= 0);
    switch (cert.kind) {
        case CertificateKind::CoTriangleFree:
            CHECK(cst::max_stable_set_size(comp) <= 2);
            break;
        case CertificateKind::GeneralizedBull:
        case CertificateKind::CaseResolved: {
            if (cert.kind == CertificateKind::CaseResolved && !cert.resolved_via_bull) {
                CHECK(cst::max_stable_set_size(comp) <= 2);
                break;
            }
            REQUIRE(cert.bull);
            Graph gb = cst::build_gb(cert.bull->r, cert.bull->s, cert.bull->t);
            REQUIRE(gb.vertex_count() == comp.vertex_count());
            const auto& f = cert.bull->mapping;
            for (int u = 0; u < comp.vertex_count(); ++u)
                for (int v = u + 1; v < comp.vertex_count(); ++v)
                    CHECK(comp.adjacent(u, v) ==
                          gb.adjacent(f[static_cast<std::size_t>(u)],
                                      f[static_cast<std::size_t>(v)]));
            break;
        }
        case CertificateKind::Unresolved:
            break;
    }
}

} // namespace

TEST_CASE("generalized pyramid coefficients at (1,1,1)") {
    auto c = cst::gp_coefficients(1, 1, 1);
    CHECK(c.A == 6);
    CHECK(c.B == 6);
    CHECK(c.C == 0);
    CHECK(c.D == 54);
    CHECK(c.E == 96);

    CHECK(cst::gp_e_closed(1, 1, 1) ==
          make(Basis::E, 6, {{{4, 1, 1}, 6}, {{3, 3}, 6}, {{5, 1}, 54}, {{6}, 96}}));
}

TEST_CASE("generalized pyramid m-expansion fixtures") {
    CHECK(cst::gp_m_closed(1, 1, 1) ==
          cst::mtilde_to_m(make(Basis::MTilde, 6,
                                {{{3, 1, 1, 1}, 1},
                                 {{2, 2, 2}, 1},
                                 {{2, 2, 1, 1}, 6},
                                 {{2, 1, 1, 1, 1}, 6},
                                 {{1, 1, 1, 1, 1, 1}, 1}})));
    // coefficient of mt_(2,2,2,1) at (2,1,1) is rst = 2
    CHECK(cst::m_to_mtilde(cst::gp_m_closed(2, 1, 1)).coeff(p({2, 2, 2, 1})) == 2);
    CHECK_THROWS_AS(cst::gp_m_closed(0, 1, 1), cst::DomainError);
    CHECK_THROWS_AS(cst::gp_e_closed(1, 0, 1), cst::DomainError);
}

TEST_CASE("generalized pyramid closed forms match the census pipeline, parameters <= 2") {
    for (int r = 1; r <= 2; ++r)
        for (int s = 1; s <= 2; ++s)
            for (int t = 1; t <= 2; ++t) {
                CAPTURE(r);
                CAPTURE(s);
                CAPTURE(t);
                Graph g = cst::build_gp(r, s, t);
                CHECK(cst::gp_m_closed(r, s, t) == cst::csf_m(g));
                CHECK(cst::gp_e_closed(r, s, t) == cst::csf_e(g));
            }
}

TEST_CASE("generalized pyramid closed forms are symmetric in (r,s,t)") {
    for (int r = 1; r <= 3; ++r)
        for (int s = r; s <= 3; ++s)
            for (int t = s; t <= 3; ++t) {
                auto base_m = cst::gp_m_closed(r, s, t);
                auto base_e = cst::gp_e_closed(r, s, t);
                for (auto [a, b, c] : {std::array{r, t, s}, {s, r, t}, {s, t, r}, {t, r, s},
                                       {t, s, r}}) {
                    CHECK(cst::gp_m_closed(a, b, c) == base_m);
                    CHECK(cst::gp_e_closed(a, b, c) == base_e);
                }
            }
}

TEST_CASE("positivity of the grouped coefficient summands, parameters <= 4") {
    for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 4; ++s)
            for (int t = 1; t <= 4; ++t) {
                auto c = cst::gp_coefficients(r, s, t);
                CHECK(c.A >= 0);
                CHECK(c.B >= 0);
                CHECK(c.C >= 0);
                CHECK(c.D >= 0);
                CHECK(c.E >= 0);
                for (const Int& group : cst::gp_c_groups(r, s, t)) CHECK(group >= 0);
                for (const Int& group : cst::gp_d_groups(r, s, t)) CHECK(group >= 0);
            }
    // the group decomposition actually assembles D
    auto groups = cst::gp_d_groups(3, 2, 4);
    Int total = std::accumulate(groups.begin(), groups.end(), Int(0));
    CHECK(cst::gp_coefficients(3, 2, 4).D == cst::factorial(3 + 2 + 4 - 2) * total);
}

TEST_CASE("generalized bull fixtures") {
    CHECK(cst::m_to_mtilde(cst::gb_m_closed(1, 1, 1)) ==
          make(Basis::MTilde, 5,
               {{{3, 1, 1}, 1}, {{2, 2, 1}, 3}, {{2, 1, 1, 1}, 5}, {{1, 1, 1, 1, 1}, 1}}));
    // leading augmented coefficient is t
    CHECK(cst::m_to_mtilde(cst::gb_m_closed(1, 1, 2)).coeff(p({3, 1, 1, 1})) == 2);
    CHECK(cst::gb_e_closed(1, 1, 1) ==
          make(Basis::E, 5, {{{3, 1, 1}, 2}, {{3, 2}, 2}, {{4, 1}, 10}, {{5}, 10}}));
    CHECK(cst::gb_e_closed(2, 1, 1) ==
          make(Basis::E, 6, {{{4, 1, 1}, 6}, {{4, 2}, 8}, {{5, 1}, 58}, {{6}, 72}}));
    CHECK_THROWS_AS(cst::gb_m_closed(1, 1, 0), cst::DomainError);
    CHECK_THROWS_AS(cst::gb_e_closed(0, 0, 0), cst::DomainError);
}

TEST_CASE("generalized bull closed forms match the census pipeline, parameters <= 2") {
    for (int r = 1; r <= 2; ++r)
        for (int s = 1; s <= 2; ++s)
            for (int t = 1; t <= 2; ++t) {
                CAPTURE(r);
                CAPTURE(s);
                CAPTURE(t);
                Graph g = cst::build_gb(r, s, t);
                CHECK(cst::gb_m_closed(r, s, t) == cst::csf_m(g));
                SymPoly e = cst::gb_e_closed(r, s, t);
                CHECK(e == cst::csf_e(g));
                for (const auto& [key, c] : e.terms()) CHECK(c >= 0);
            }
}

TEST_CASE("structural root") {
    // cliques: the first vertex qualifies
    CHECK(cst::find_structural_root(cst::build_complete(5)).root == 0);

    auto gb = cst::find_structural_root(cst::build_gb(1, 1, 1));
    CHECK(gb.root == 0);
    CHECK(cst::has_structural_root_properties(cst::build_gb(1, 1, 1), gb.root));

    // P5: endpoints qualify (singleton layers); the middle vertex fails the
    // clique-layer condition because {0,4} spans no edge
    Graph p5 = cst::build_path(5);
    CHECK(cst::find_structural_root(p5).root == 0);
    CHECK(cst::has_structural_root_properties(p5, 0));
    CHECK_FALSE(cst::has_structural_root_properties(p5, 2));

    CHECK_THROWS_AS(cst::find_structural_root(cst::build_pattern("2K2")), cst::DomainError);
    CHECK_THROWS_AS(cst::find_structural_root(cst::build_pattern("claw")), cst::DomainError);
}

TEST_CASE("classify rejects inputs outside the class, naming the predicate") {
    auto expect_violation = [](const Graph& g, const std::string& predicate) {
        try {
            cst::classify(g);
            FAIL("expected ClassificationError");
        } catch (const cst::ClassificationError& e) {
            CHECK(e.predicate() == predicate);
            CHECK_FALSE(e.witness().empty());
        }
    };
    expect_violation(cst::build_pattern("C4"), "chordal");
    expect_violation(cst::build_path(5), "2K2-free");
    expect_violation(cst::build_pattern("claw"), "claw-free");
}

TEST_CASE("classify: single-vertex components are co-triangle-free") {
    auto certs = cst::classify(Graph(2));
    REQUIRE(certs.size() == 2);
    for (const auto& cert : certs) {
        CHECK(cert.kind == CertificateKind::CoTriangleFree);
        CHECK(cert.case_number == 0);
        CHECK(cert.e_expansion == make(Basis::E, 1, {{{1}, 1}}));
    }
    CHECK(certs[1].component == std::vector<int>{1});
}

TEST_CASE("classify: case 1 via a star whose center comes first") {
    Graph star(3);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    auto certs = cst::classify(star);
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].case_number == 1); // [N(0)] = {1,2} has no edge
    CHECK(certs[0].kind == CertificateKind::CaseResolved);
    CHECK_FALSE(certs[0].resolved_via_bull);
    revalidate(star, certs[0]);
}

TEST_CASE("classify: complete graphs land in case 3") {
    auto certs = cst::classify(cst::build_complete(4));
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].case_number == 3);
    CHECK(certs[0].kind == CertificateKind::CaseResolved);
    revalidate(cst::build_complete(4), certs[0]);
}

TEST_CASE("classify: generalized bulls from the pendant root land in case 2") {
    Graph g = cst::build_gb(2, 1, 1);
    auto certs = cst::classify(g);
    REQUIRE(certs.size() == 1);
    const auto& cert = certs[0];
    CHECK(cert.case_number == 2);
    CHECK(cert.kind == CertificateKind::CaseResolved);
    CHECK(cert.resolved_via_bull); // GB(2,1,1) holds co-triangle {a,b,t}
    REQUIRE(cert.bull);
    CHECK(cert.bull->r + cert.bull->s + cert.bull->t == 4);
    revalidate(g, cert);
}

TEST_CASE("classify: diamond is case 6") {
    auto certs = cst::classify(cst::build_pattern("diamond"));
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].case_number == 6);
    CHECK(certs[0].kind == CertificateKind::CoTriangleFree);
    revalidate(cst::build_pattern("diamond"), certs[0]);
}

TEST_CASE("classify: case 5 with clique B stays co-triangle-free") {
    // w=0 sees A={2,3} (reached from p=1) and the clique B={4,5}
    Graph g(6);
    for (int v : {2, 3, 4, 5}) g.add_edge(0, v);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(4, 5);
    g.add_edge(2, 5);
    g.add_edge(3, 5);
    auto certs = cst::classify(g);
    REQUIRE(certs.size() == 1);
    const auto& cert = certs[0];
    CHECK(cert.case_number == 5);
    CHECK(cert.kind == CertificateKind::CoTriangleFree);
    CHECK(cert.root == 0);
    REQUIRE(cert.p);
    CHECK(*cert.p == 1);
    CHECK(cert.set_a == std::vector<int>{2, 3});
    CHECK(cert.set_b == std::vector<int>{4, 5});
    revalidate(g, cert);
}

TEST_CASE("classify: case 5 with broken B recovers the generalized bull") {
    // GB(2,2,1) relabeled so a K_s vertex gets index 0:
    // 0=s1 (the root), 1,2=K_r, 3=s2, 4=K_t, 5=a, 6=b
    std::vector<int> perm = {5, 6, 1, 2, 0, 3, 4};
    Graph g = permuted(cst::build_gb(2, 2, 1), perm);
    auto certs = cst::classify(g);
    REQUIRE(certs.size() == 1);
    const auto& cert = certs[0];
    CHECK(cert.case_number == 5);
    CHECK(cert.kind == CertificateKind::GeneralizedBull);
    CHECK(cert.root == 0);
    REQUIRE(cert.p);
    CHECK(*cert.p == 5);
    REQUIRE(cert.x);
    CHECK(*cert.x == 6); // the pendant-side b, after the dichotomy swap
    CHECK(cert.set_a == std::vector<int>{1, 2});
    CHECK(cert.set_b1 == std::vector<int>{3});
    CHECK(cert.set_b2 == std::vector<int>{4});
    REQUIRE(cert.bull);
    CHECK(cert.bull->r == 2);
    CHECK(cert.bull->s == 2);
    CHECK(cert.bull->t == 1);
    revalidate(g, cert);
}

TEST_CASE("classifier soundness on every connected 2K2-free unit interval graph, n <= 5") {
    Graph two_k2 = cst::build_pattern("2K2");
    int classified = 0;
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t code = 0; code < cst::labeled_graph_code_count(n); ++code) {
            Graph g = cst::labeled_graph_from_code(n, code);
            if (!cst::is_connected(g)) continue;
            if (cst::find_induced(g, two_k2) || !cst::is_unit_interval(g)) continue;
            auto certs = cst::classify(g);
            REQUIRE(certs.size() == 1);
            revalidate(g, certs[0]);
            CHECK(certs[0].kind != CertificateKind::Unresolved);
            ++classified;
        }
    }
    CHECK(classified > 100); // the sweep actually covered a population
}

TEST_CASE("verify_sweep") {
    auto single = cst::verify_sweep(cst::Family::GP, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].m_match);
    CHECK(single[0].e_match);
    CHECK(single[0].e_nonneg);

    auto gp = cst::verify_sweep(cst::Family::GP, 2);
    auto gb = cst::verify_sweep(cst::Family::GB, 2);
    REQUIRE(gp.size() == 8);
    REQUIRE(gb.size() == 8);
    for (const auto& e : gp) {
        CHECK(e.m_match);
        CHECK(e.e_match);
        CHECK(e.e_nonneg);
    }
    for (const auto& e : gb) {
        CHECK(e.m_match);
        CHECK(e.e_match);
        CHECK(e.e_nonneg);
    }
    // lexicographic report order, independent of worker count
    auto parallel = cst::verify_sweep(cst::Family::GP, 2, 4);
    REQUIRE(parallel.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(parallel[i].r == gp[i].r);
        CHECK(parallel[i].s == gp[i].s);
        CHECK(parallel[i].t == gp[i].t);
        CHECK(parallel[i].m_match == gp[i].m_match);
    }
    CHECK(gp[0].r == 1);
    CHECK(gp[1].t == 2); // (1,1,2) follows (1,1,1)

    auto j = cst::sweep_to_json(gp);
    CHECK(j.size() == 8);
    CHECK(j[0]["family"] == "gp");
    CHECK(j[0]["m_match"] == true);
    CHECK(j[0].contains("millis"));
}

TEST_CASE("certificate JSON carries the structure") {
    std::vector<int> perm = {5, 6, 1, 2, 0, 3, 4};
    Graph g = permuted(cst::build_gb(2, 2, 1), perm);
    auto j = cst::certificate_to_json(cst::classify(g)[0]);
    CHECK(j["kind"] == "generalized-bull");
    CHECK(j["case"] == 5);
    CHECK(j["root"] == 0);
    CHECK(j["p"] == 5);
    CHECK(j["A"] == std::vector<int>{1, 2});
    CHECK(j["gb"]["r"] == 2);
    CHECK(j["e_expansion"]["basis"] == "E");
}
