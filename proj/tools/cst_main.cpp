// cst: chromatic symmetric function toolkit.
//
// Exit codes: 0 success (and true verdicts), 1 false verdict or failed
// verification sweep, 2 graph parse error, 3 resource bound exceeded,
// 4 closed-form expansion requested with a zero family parameter,
// 5 classification precondition violated.

#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cst/csf.hpp"
#include "cst/graph_io.hpp"
#include "cst/theorems.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
    std::string format = "text";
    int max_census_vertices = cst::kDefaultCensusVertexBound;
    int max_oracle_vertices = cst::kDefaultOracleVertexBound;
    int workers = 1;
};

bool json_mode(const RunConfig& cfg) { return cfg.format == "json"; }

cst::Graph load_graph(const std::string& source) {
    if (source == "-") return cst::parse_graph_auto(std::cin);
    std::ifstream file(source);
    if (!file) throw cst::ParseError("cannot open '" + source + "'");
    return cst::parse_graph_auto(file);
}

std::string join(const std::vector<int>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(vs[i]);
    }
    return s;
}

int cmd_expand(const RunConfig& cfg, const std::string& source, const std::string& basis) {
    cst::Graph g = load_graph(source);
    cst::SymPoly m = cst::csf_m(g, cfg.max_census_vertices);
    cst::SymPoly out = basis == "m"        ? m
                       : basis == "mtilde" ? cst::m_to_mtilde(m)
                                           : cst::m_to_e(m);
    if (json_mode(cfg))
        std::cout << cst::sympoly_to_json(out).dump() << "\n";
    else
        std::cout << cst::to_string(out) << "\n";
    return 0;
}

int cmd_check(const RunConfig& cfg, const std::string& source, const std::string& predicate) {
    cst::Graph g = load_graph(source);
    bool value = true;
    std::vector<int> witness;
    std::string witness_note;

    auto pattern_check = [&](const char* name) {
        if (auto w = cst::find_induced(g, cst::build_pattern(name))) {
            value = false;
            witness = *w;
            witness_note = std::string("induced ") + name;
        }
    };

    std::optional<cst::Partition> negative_key;
    if (predicate == "e-positive") {
        auto verdict = cst::e_positivity(g, source, cfg.max_census_vertices);
        value = verdict.positive;
        if (!value) {
            negative_key = verdict.witness;
            witness_note = "coefficient of e[" + cst::to_plus_string(*verdict.witness) + "] = " +
                           verdict.e_expansion.coeff(*verdict.witness).str();
        }
    } else if (predicate == "claw-free") {
        pattern_check("claw");
    } else if (predicate == "2k2-free") {
        pattern_check("2K2");
    } else if (predicate == "chordal") {
        if (!cst::is_chordal(g)) {
            value = false;
            if (auto cycle = cst::find_induced_long_cycle(g)) witness = *cycle;
            witness_note = "induced cycle";
        }
    } else if (predicate == "at-free") {
        if (auto at = cst::find_asteroidal_triple(g)) {
            value = false;
            witness = {(*at)[0], (*at)[1], (*at)[2]};
            witness_note = "asteroidal triple";
        }
    } else if (predicate == "unit-interval") {
        pattern_check("claw");
        if (value && !cst::is_chordal(g)) {
            value = false;
            if (auto cycle = cst::find_induced_long_cycle(g)) witness = *cycle;
            witness_note = "induced cycle";
        }
        if (value) {
            if (auto at = cst::find_asteroidal_triple(g)) {
                value = false;
                witness = {(*at)[0], (*at)[1], (*at)[2]};
                witness_note = "asteroidal triple";
            }
        }
    } else if (predicate == "co-triangle-free") {
        if (auto triple = cst::find_co_triangle(g)) {
            value = false;
            witness = {(*triple)[0], (*triple)[1], (*triple)[2]};
            witness_note = "stable triple";
        }
    } else {
        throw cst::DomainError("unknown predicate '" + predicate + "'");
    }

    if (json_mode(cfg)) {
        json j{{"predicate", predicate}, {"value", value}};
        if (!value) {
            if (negative_key)
                j["witness"] = negative_key->parts();
            else
                j["witness"] = witness;
            j["witness_kind"] = witness_note;
        }
        std::cout << j.dump() << "\n";
    } else if (value) {
        std::cout << "true\n";
    } else {
        std::cout << "false";
        if (negative_key)
            std::cout << " (" << witness_note << ")";
        else if (!witness.empty())
            std::cout << " (" << witness_note << ": " << join(witness) << ")";
        std::cout << "\n";
    }
    return value ? 0 : 1;
}

int cmd_family(const RunConfig& cfg, const std::string& name, int r, int s, int t,
               const std::string& emit, const std::string& basis) {
    const bool gp = name == "gp";
    if (emit == "edges") {
        cst::Graph g = gp ? cst::build_gp(r, s, t) : cst::build_gb(r, s, t);
        if (json_mode(cfg)) {
            json edges = json::array();
            for (int u = 0; u < g.vertex_count(); ++u)
                for (int v = u + 1; v < g.vertex_count(); ++v)
                    if (g.adjacent(u, v)) edges.push_back({u, v});
            std::cout << json{{"family", name}, {"r", r}, {"s", s}, {"t", t},
                              {"n", g.vertex_count()}, {"edges", edges}}
                             .dump()
                      << "\n";
        } else {
            std::cout << cst::to_edge_list(g);
        }
        return 0;
    }
    if (r < 1 || s < 1 || t < 1) {
        std::cerr << "closed-form expansions assume positive r,s,t (got " << r << "," << s << ","
                  << t << "); build the graph with --emit edges and expand it instead\n";
        return 4;
    }
    cst::SymPoly closed_m = gp ? cst::gp_m_closed(r, s, t) : cst::gb_m_closed(r, s, t);
    cst::SymPoly out = basis == "m"        ? closed_m
                       : basis == "mtilde" ? cst::m_to_mtilde(closed_m)
                       : gp                ? cst::gp_e_closed(r, s, t)
                                           : cst::gb_e_closed(r, s, t);
    if (json_mode(cfg)) {
        json j{{"family", name}, {"r", r}, {"s", s}, {"t", t},
               {"expansion", cst::sympoly_to_json(out)}};
        if (gp && basis == "e") {
            auto c = cst::gp_coefficients(r, s, t);
            j["coefficients"] = {{"A", c.A.str()}, {"B", c.B.str()}, {"C", c.C.str()},
                                 {"D", c.D.str()}, {"E", c.E.str()}};
        }
        std::cout << j.dump() << "\n";
    } else {
        if (gp && basis == "e") {
            auto c = cst::gp_coefficients(r, s, t);
            std::cout << "A = " << c.A << "\nB = " << c.B << "\nC = " << c.C << "\nD = " << c.D
                      << "\nE = " << c.E << "\n";
        }
        std::cout << cst::to_string(out) << "\n";
    }
    return 0;
}

int cmd_classify(const RunConfig& cfg, const std::string& source) {
    cst::Graph g = load_graph(source);
    std::vector<cst::Certificate> certs;
    try {
        certs = cst::classify(g, cfg.max_census_vertices);
    } catch (const cst::ClassificationError& e) {
        if (json_mode(cfg)) {
            std::cout << json{{"error", "precondition"},
                              {"predicate", e.predicate()},
                              {"witness", e.witness()}}
                             .dump()
                      << "\n";
        } else {
            std::cerr << e.what();
            if (!e.witness().empty()) std::cerr << " (witness: " << join(e.witness()) << ")";
            std::cerr << "\n";
        }
        return 5;
    }
    if (json_mode(cfg)) {
        json out = json::array();
        for (const auto& cert : certs) out.push_back(cst::certificate_to_json(cert));
        std::cout << out.dump() << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < certs.size(); ++i) {
        const auto& cert = certs[i];
        std::cout << "component " << i << " {" << join(cert.component) << "}: "
                  << cst::certificate_kind_name(cert.kind);
        if (cert.case_number > 0) std::cout << ", case " << cert.case_number;
        if (cert.root >= 0) std::cout << ", w=" << cert.root;
        if (cert.kind == cst::CertificateKind::CaseResolved)
            std::cout << ", via " << (cert.resolved_via_bull ? "generalized-bull" : "co-triangle-free");
        if (cert.bull)
            std::cout << ", GB(" << cert.bull->r << "," << cert.bull->s << "," << cert.bull->t
                      << ")";
        std::cout << "\n";
        if (!cert.set_a.empty()) std::cout << "  A  = {" << join(cert.set_a) << "}\n";
        if (!cert.set_b.empty()) std::cout << "  B  = {" << join(cert.set_b) << "}\n";
        if (!cert.set_b1.empty()) std::cout << "  B1 = {" << join(cert.set_b1) << "}\n";
        if (!cert.set_b2.empty()) std::cout << "  B2 = {" << join(cert.set_b2) << "}\n";
        if (cert.p) std::cout << "  p = " << *cert.p << "\n";
        if (cert.q) std::cout << "  q = " << *cert.q << "\n";
        if (cert.x) std::cout << "  x = " << *cert.x << "\n";
        if (cert.bull) std::cout << "  mapping = [" << join(cert.bull->mapping) << "]\n";
        std::cout << "  X = " << cst::to_string(cert.e_expansion) << "\n";
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& family, int max_param) {
    cst::Family fam = family == "gp" ? cst::Family::GP : cst::Family::GB;
    auto entries = cst::verify_sweep(fam, max_param, cfg.workers);
    bool all_ok = true;
    for (const auto& e : entries) all_ok = all_ok && e.m_match && e.e_match && e.e_nonneg;
    if (json_mode(cfg)) {
        std::cout << cst::sweep_to_json(entries).dump() << "\n";
    } else {
        for (const auto& e : entries) {
            std::cout << cst::family_name(e.family) << " r=" << e.r << " s=" << e.s
                      << " t=" << e.t << ": m " << (e.m_match ? "ok" : "MISMATCH") << ", e "
                      << (e.e_match ? "ok" : "MISMATCH") << ", nonneg "
                      << (e.e_nonneg ? "ok" : "VIOLATED") << " (" << e.millis << " ms)\n";
        }
        std::cout << (all_ok ? "all triples verified\n" : "SOME TRIPLES FAILED\n");
    }
    return all_ok ? 0 : 1;
}

struct SearchTotals {
    std::uint64_t checked = 0, in_class = 0, positive = 0, negative = 0;
};

int cmd_search(const RunConfig& cfg, int max_n, const std::string& klass, bool connected_only,
               const std::string& hunt) {
    if (max_n < 1) throw cst::DomainError("search: --max-n must be >= 1");
    if (max_n > 7)
        std::cerr << "note: enumerating all labeled graphs beyond 7 vertices is expensive\n";

    std::map<int, SearchTotals> per_n;
    std::vector<std::pair<int, std::uint64_t>> negatives; // (n, code)
    std::mutex merge_mutex;

    for (int n = 1; n <= max_n; ++n) {
        const std::uint64_t codes = cst::labeled_graph_code_count(n);
        std::atomic<std::uint64_t> cursor{0};
        std::vector<SearchTotals> partial(static_cast<std::size_t>(cfg.workers));
        std::vector<std::vector<std::pair<int, std::uint64_t>>> partial_neg(
            static_cast<std::size_t>(cfg.workers));
        std::exception_ptr failure;

        auto worker = [&](int id) {
            try {
                for (;;) {
                    std::uint64_t code = cursor.fetch_add(1);
                    if (code >= codes) return;
                    cst::Graph g = cst::labeled_graph_from_code(n, code);
                    if (connected_only && !cst::is_connected(g)) continue;
                    auto& tally = partial[static_cast<std::size_t>(id)];
                    ++tally.checked;
                    bool in_class = true;
                    if (klass == "2k2-unit-interval")
                        in_class = !cst::find_induced(g, cst::build_pattern("2K2")) &&
                                   cst::is_unit_interval(g);
                    else if (klass == "co-triangle-free")
                        in_class = !cst::find_co_triangle(g);
                    if (!in_class) continue;
                    ++tally.in_class;
                    auto verdict = cst::e_positivity(g, "", cfg.max_census_vertices);
                    if (verdict.positive) {
                        ++tally.positive;
                    } else {
                        ++tally.negative;
                        partial_neg[static_cast<std::size_t>(id)].push_back({n, code});
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(merge_mutex);
                if (!failure) failure = std::current_exception();
            }
        };

        if (cfg.workers == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int i = 0; i < cfg.workers; ++i) pool.emplace_back(worker, i);
            for (auto& th : pool) th.join();
        }
        if (failure) std::rethrow_exception(failure);
        for (int i = 0; i < cfg.workers; ++i) {
            auto& tally = partial[static_cast<std::size_t>(i)];
            per_n[n].checked += tally.checked;
            per_n[n].in_class += tally.in_class;
            per_n[n].positive += tally.positive;
            per_n[n].negative += tally.negative;
            negatives.insert(negatives.end(), partial_neg[static_cast<std::size_t>(i)].begin(),
                             partial_neg[static_cast<std::size_t>(i)].end());
        }
    }
    std::sort(negatives.begin(), negatives.end());

    SearchTotals total;
    for (const auto& [n, tally] : per_n) {
        total.checked += tally.checked;
        total.in_class += tally.in_class;
        total.positive += tally.positive;
        total.negative += tally.negative;
    }

    if (json_mode(cfg)) {
        json per = json::array();
        for (const auto& [n, tally] : per_n)
            per.push_back({{"n", n},
                           {"checked", tally.checked},
                           {"in_class", tally.in_class},
                           {"positive", tally.positive},
                           {"negative", tally.negative}});
        json negs = json::array();
        for (const auto& [n, code] : negatives)
            negs.push_back({{"n", n}, {"edge_list", cst::to_edge_list(
                                           cst::labeled_graph_from_code(n, code))}});
        std::cout << json{{"class", klass},
                          {"connected_only", connected_only},
                          {"per_n", per},
                          {"checked", total.checked},
                          {"in_class", total.in_class},
                          {"positive", total.positive},
                          {"negative", total.negative},
                          {"negatives", negs}}
                         .dump()
                  << "\n";
        return 0;
    }

    for (const auto& [n, tally] : per_n)
        std::cout << "n=" << n << ": checked " << tally.checked << ", in-class " << tally.in_class
                  << ", positive " << tally.positive << ", negative " << tally.negative << "\n";
    std::cout << "total: checked " << total.checked << ", in-class " << total.in_class
              << ", positive " << total.positive << ", negative " << total.negative << "\n";
    if (hunt == "negative-e-coefficient" && !negatives.empty()) {
        std::cout << "negative instances:\n";
        for (const auto& [n, code] : negatives)
            std::cout << cst::to_edge_list(cst::labeled_graph_from_code(n, code)) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic symmetric function toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    RunConfig cfg;
    app.add_option("--format", cfg.format, "output mode")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--max-census-n", cfg.max_census_vertices,
                   "largest graph admitted to the stable-partition census")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-oracle-n", cfg.max_oracle_vertices,
                   "largest graph admitted to the coloring-count oracle")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--workers", cfg.workers, "worker threads for sweeps and searches")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string source = "-", basis = "e", predicate, family, emit = "edges";
    std::string klass = "all", hunt;
    int r = 0, s = 0, t = 0, max_param = 2, max_n = 5;
    bool connected_only = false;

    auto* expand = app.add_subcommand("expand", "print a graph's chromatic symmetric function");
    expand->add_option("graph", source, "edge-list or graph6 file, or - for stdin");
    expand->add_option("--basis", basis, "m | mtilde | e")
        ->check(CLI::IsMember({"m", "mtilde", "e"}))
        ->capture_default_str();

    auto* check = app.add_subcommand("check", "test a predicate; exit 0 true, 1 false");
    check->add_option("graph", source, "edge-list or graph6 file, or - for stdin");
    check->add_option("--predicate", predicate, "predicate to test")
        ->required()
        ->check(CLI::IsMember({"e-positive", "claw-free", "2k2-free", "chordal", "at-free",
                               "unit-interval", "co-triangle-free"}));

    auto* fam = app.add_subcommand("family", "construct GP/GB graphs or their closed expansions");
    fam->add_option("name", family, "gp | gb")->required()->check(CLI::IsMember({"gp", "gb"}));
    fam->add_option("r", r, "")->required();
    fam->add_option("s", s, "")->required();
    fam->add_option("t", t, "")->required();
    fam->add_option("--emit", emit, "edges | expansion")
        ->check(CLI::IsMember({"edges", "expansion"}))
        ->capture_default_str();
    fam->add_option("--basis", basis, "m | mtilde | e (expansion only)")
        ->check(CLI::IsMember({"m", "mtilde", "e"}))
        ->capture_default_str();

    auto* classify_cmd = app.add_subcommand("classify", "structural certificates per component");
    classify_cmd->add_option("graph", source, "edge-list or graph6 file, or - for stdin");

    auto* verify = app.add_subcommand("verify", "closed forms vs. brute force over a parameter box");
    verify->add_option("--family", family, "gp | gb")
        ->required()
        ->check(CLI::IsMember({"gp", "gb"}));
    verify->add_option("--max-param", max_param, "check all 1 <= r,s,t <= this")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* search = app.add_subcommand("search", "exhaustive labeled-graph sweeps");
    search->add_option("--max-n", max_n, "enumerate all labeled graphs on <= this many vertices")
        ->capture_default_str();
    search->add_option("--class", klass, "graph class filter")
        ->check(CLI::IsMember({"2k2-unit-interval", "co-triangle-free", "all"}))
        ->capture_default_str();
    search->add_flag("--connected", connected_only, "restrict to connected graphs");
    search->add_option("--hunt", hunt, "dump every hit as an edge list")
        ->check(CLI::IsMember({"negative-e-coefficient"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed()) return cmd_expand(cfg, source, basis);
        if (check->parsed()) return cmd_check(cfg, source, predicate);
        if (fam->parsed()) return cmd_family(cfg, family, r, s, t, emit, basis);
        if (classify_cmd->parsed()) return cmd_classify(cfg, source);
        if (verify->parsed()) return cmd_verify(cfg, family, max_param);
        if (search->parsed()) return cmd_search(cfg, max_n, klass, connected_only, hunt);
    } catch (const cst::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const cst::BoundError& e) {
        std::cerr << "resource bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const cst::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
