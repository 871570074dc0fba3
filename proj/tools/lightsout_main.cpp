// Command-line front end: graph analysis, solving, certificate
// generation/verification, randomized join-table checking, generators.
//
// Exit codes: 0 success, 1 negative-but-valid answer (unsolvable /
// verification failed / table violation), 2 usage or input error,
// 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "lightsout/json_io.hpp"
#include "lightsout/oracle.hpp"

namespace lo = lightsout;

namespace {

lo::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lo::contract_violation("cannot open certificate file: " + path);
    try {
        return lo::json::parse(in);
    } catch (const lo::json::parse_error& e) {
        throw lo::contract_violation(std::string("certificate JSON parse error: ") + e.what());
    }
}

lo::BitVec parse_config(const std::string& s, std::size_t n) {
    lo::BitVec c = lo::BitVec::from_string(s);
    if (c.size() != n)
        throw lo::contract_violation("configuration length " + std::to_string(c.size()) +
                                     " does not match vertex count " + std::to_string(n));
    return c;
}

void emit(const lo::json& j) { std::cout << j.dump(2) << '\n'; }

std::string row_key(std::pair<int, int> row) {
    return "(" + std::to_string(row.first) + "," + std::to_string(row.second) + ")";
}

int cmd_analyze(const std::string& graph_file) {
    lo::Graph g = lo::read_edge_list_file(graph_file);
    std::size_t nu = lo::nullity(g);
    lo::json rep{{"n", g.vertex_count()},
                 {"edge_count", g.edge_count()},
                 {"rank", g.vertex_count() - nu},
                 {"nullity", nu},
                 {"always_solvable", nu == 0}};
    lo::json verts = lo::json::array();
    if (g.vertex_count() > 0)
        for (const lo::VertexProfile& p : lo::profile(g))
            verts.push_back({{"vertex", p.vertex},
                             {"activation", lo::to_int(p.activation)},
                             {"null_difference", p.null_difference},
                             {"fixed", p.fixed}});
    rep["vertices"] = std::move(verts);
    lo::json basis = lo::json::array();
    for (const lo::BitVec& l : lo::null_patterns(g)) basis.push_back(l.to_string());
    rep["null_patterns"] = std::move(basis);
    emit(rep);
    return 0;
}

int cmd_solve(const std::string& graph_file, const std::string& config) {
    lo::Graph g = lo::read_edge_list_file(graph_file);
    lo::BitVec c = parse_config(config, g.vertex_count());
    auto sol = lo::solve_config(g, c);
    if (!sol) {
        emit(lo::json{{"solvable", false}});
        return 1;
    }
    lo::json basis = lo::json::array();
    for (const lo::BitVec& l : sol->kernel_basis) basis.push_back(l.to_string());
    emit(lo::json{{"solvable", true},
                  {"particular", sol->particular.to_string()},
                  {"kernel_basis", std::move(basis)}});
    return 0;
}

int cmd_chain(const std::string& graph_file) {
    lo::Graph g = lo::read_edge_list_file(graph_file);
    emit(lo::to_json(lo::build_chain(g)));
    return 0;
}

int cmd_partition(const std::string& graph_file) {
    lo::Graph g = lo::read_edge_list_file(graph_file);
    if (!lo::is_tree(g)) throw lo::contract_violation("partition requires a tree input");
    emit(lo::to_json(lo::min_pass_tree(g)));
    return 0;
}

int cmd_decompose(const std::string& graph_file) {
    lo::Graph g = lo::read_edge_list_file(graph_file);
    if (!lo::is_tree(g)) throw lo::contract_violation("decompose requires a tree input");
    if (!lo::is_always_solvable(g))
        throw lo::contract_violation("decompose requires an always solvable tree (nullity " +
                                     std::to_string(lo::nullity(g)) + ")");
    emit(lo::to_json(lo::decompose_tree(g)));
    return 0;
}

int cmd_verify(const std::string& graph_file, const std::string& cert_file) {
    lo::Graph g = lo::read_edge_list_file(graph_file);
    lo::json j = load_json_file(cert_file);
    lo::VerifyResult res;
    std::string kind;
    switch (lo::detect_certificate_kind(j)) {
        case lo::CertificateKind::chain:
            kind = "chain";
            res = lo::verify_chain(g, lo::chain_from_json(j));
            break;
        case lo::CertificateKind::pass:
            kind = "pass";
            res = lo::verify_pass(g, lo::pass_from_json(j), lo::is_tree(g));
            break;
        case lo::CertificateKind::decomposition:
            kind = "decomposition";
            res = lo::verify_decomposition(g, lo::decomposition_from_json(j));
            break;
    }
    lo::json out{{"valid", res.ok}, {"certificate", kind}};
    if (!res.ok) out["reason"] = res.reason;
    emit(out);
    return res.ok ? 0 : 1;
}

int cmd_table_check(std::size_t trials, std::size_t max_size, std::uint64_t seed) {
    lo::TableCheckSummary sum = lo::run_table_check(trials, max_size, seed);
    lo::json rows;
    for (const auto& [row, hits] : sum.row_hits) rows[row_key(row)] = hits;
    emit(lo::json{{"trials", sum.trials},
                  {"max_size", max_size},
                  {"seed", seed},
                  {"violations", sum.violations},
                  {"rows", std::move(rows)}});
    return sum.violations == 0 ? 0 : 1;
}

int cmd_oracle_enumerate(const std::string& graph_file, const std::string& config) {
    lo::Graph g = lo::read_edge_list_file(graph_file);
    lo::BitVec c = parse_config(config, g.vertex_count());
    lo::json sols = lo::json::array();
    for (const lo::BitVec& p : lo::oracle::enumerate_solutions(g, c))
        sols.push_back(p.to_string());
    emit(lo::json{{"count", sols.size()}, {"solutions", std::move(sols)}});
    return 0;
}

int cmd_oracle_stats(const std::string& graph_file) {
    lo::Graph g = lo::read_edge_list_file(graph_file);
    lo::oracle::ActivationStats st = lo::oracle::activation_stats(g);
    emit(lo::json{{"total_solutions", st.total}, {"activated", st.activated}});
    return 0;
}

int cmd_oracle_pi(const std::string& graph_file) {
    lo::Graph g = lo::read_edge_list_file(graph_file);
    auto [pi, witness] = lo::oracle::pi_partition_oracle(g);
    emit(lo::json{{"pi", pi}, {"witness", lo::to_json(witness)}});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lights Out analysis over GF(2): nullity, activation classes, "
                 "and verifiable structure certificates"};
    app.require_subcommand(1);

    std::string graph_file, config, cert_file;
    std::size_t trials = 2000, max_size = 12;
    std::uint64_t seed = 1;
    std::size_t gen_n = 8;
    double gen_p = 0.5;

    auto* analyze = app.add_subcommand("analyze", "Full per-graph and per-vertex report");
    analyze->add_option("graph", graph_file, "edge-list file")->required();

    auto* solve = app.add_subcommand("solve", "Solve one configuration");
    solve->add_option("graph", graph_file)->required();
    solve->add_option("config", config, "bitstring, first character = vertex 0")->required();

    auto* chain = app.add_subcommand("chain", "Vertex-removal chain certificate");
    chain->add_option("graph", graph_file)->required();

    auto* partition = app.add_subcommand("partition",
                                         "Minimal always-solvable partition of a tree");
    partition->add_option("graph", graph_file)->required();

    auto* decompose = app.add_subcommand("decompose",
                                         "Join decomposition of an always solvable tree");
    decompose->add_option("graph", graph_file)->required();

    auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
    verify->add_option("graph", graph_file)->required();
    verify->add_option("certificate", cert_file, "certificate JSON file")->required();

    auto* table = app.add_subcommand("table-check", "Randomized join-table check");
    table->add_option("--trials", trials)->check(CLI::PositiveNumber);
    table->add_option("--max-size", max_size)->check(CLI::PositiveNumber);
    table->add_option("--seed", seed);

    auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth");
    oracle->require_subcommand(1);
    auto* oenum = oracle->add_subcommand("enumerate", "All solving patterns of a configuration");
    oenum->add_option("graph", graph_file)->required();
    oenum->add_option("config", config)->required();
    auto* ostats = oracle->add_subcommand("stats", "Activation counts over all-ones solutions");
    ostats->add_option("graph", graph_file)->required();
    auto* opi = oracle->add_subcommand("pi", "Exact minimal always-solvable partition size");
    opi->add_option("graph", graph_file)->required();

    auto* gen = app.add_subcommand("gen", "Random graph generators");
    gen->require_subcommand(1);
    auto* gtree = gen->add_subcommand("tree", "Uniform random labeled tree");
    gtree->add_option("--n", gen_n)->check(CLI::PositiveNumber);
    gtree->add_option("--seed", seed);
    auto* ggraph = gen->add_subcommand("graph", "Independent-edge random graph");
    ggraph->add_option("--n", gen_n);
    ggraph->add_option("--p", gen_p)->check(CLI::Range(0.0, 1.0));
    ggraph->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return cmd_analyze(graph_file);
        if (*solve) return cmd_solve(graph_file, config);
        if (*chain) return cmd_chain(graph_file);
        if (*partition) return cmd_partition(graph_file);
        if (*decompose) return cmd_decompose(graph_file);
        if (*verify) return cmd_verify(graph_file, cert_file);
        if (*table) return cmd_table_check(trials, max_size, seed);
        if (*oenum) return cmd_oracle_enumerate(graph_file, config);
        if (*ostats) return cmd_oracle_stats(graph_file);
        if (*opi) return cmd_oracle_pi(graph_file);
        if (*gtree) {
            lo::write_edge_list(lo::random_tree(gen_n, seed), std::cout);
            return 0;
        }
        if (*ggraph) {
            lo::write_edge_list(lo::random_graph(gen_n, gen_p, seed), std::cout);
            return 0;
        }
    } catch (const lo::invariant_violation& e) {
        std::cerr << "internal invariant violation: " << e.what() << '\n';
        return 3;
    } catch (const lo::contract_violation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const lo::unsupported_size& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
