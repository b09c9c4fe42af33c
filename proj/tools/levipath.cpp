// Command-line front end: generate the graphs, run every construction,
// verify decomposition files, query the exact oracle, export DOT.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or input error,
// 3 search budget exhausted.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "levipath/bounds.hpp"
#include "levipath/gallai.hpp"
#include "levipath/io.hpp"
#include "levipath/levi.hpp"
#include "levipath/minimal.hpp"
#include "levipath/oracle.hpp"
#include "levipath/path.hpp"
#include "levipath/walecki.hpp"

using namespace levipath;

namespace {

void write_outputs(const json& graph_json, const Graph& g, const std::vector<Side>* side,
                   const std::string& out, const std::string& dot) {
    if (!out.empty())
        write_text_file(out, graph_json.dump(2) + "\n");
    else if (dot.empty())
        std::cout << graph_json.dump(2) << '\n';
    if (!dot.empty()) write_text_file(dot, to_dot(g, "g", side));
}

void emit_decomposition(const json& graph_json, const Graph& g, const Decomposition& d,
                        const std::string& out) {
    std::cout << render_decomposition(g, d);
    if (!out.empty()) write_text_file(out, decomposition_to_json(graph_json, d).dump(2) + "\n");
}

Graph load_graph_arg(const std::string& path) { return graph_from_json(read_json_file(path)).graph; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"path decompositions of Levi graphs L1(m,k) and complete graphs K_m"};
    app.require_subcommand(1);
    int rc = 0;

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "emit a graph file");
    gen->require_subcommand(1);
    {
        static int m, k;
        static std::string out, dot;
        auto* levi = gen->add_subcommand("levi", "the Levi graph L1(m,k)");
        levi->add_option("m", m)->required();
        levi->add_option("k", k)->required();
        levi->add_option("--out", out, "write graph JSON here");
        levi->add_option("--dot", dot, "write DOT here");
        levi->callback([&] {
            LeviGraph lg = build_levi(m, k);
            write_outputs(levi_to_json(lg), lg.graph, &lg.side, out, dot);
        });
    }
    {
        static int m;
        static std::string out, dot;
        auto* complete = gen->add_subcommand("complete", "the complete graph K_m");
        complete->add_option("m", m)->required();
        complete->add_option("--out", out, "write graph JSON here");
        complete->add_option("--dot", dot, "write DOT here");
        complete->callback([&] {
            Graph g = build_complete(m);
            write_outputs(graph_to_json(g, "plain", m), g, nullptr, out, dot);
        });
    }

    // ---- decompose ----
    auto* dec = app.add_subcommand("decompose", "run a construction");
    dec->require_subcommand(1);
    {
        static int m, k;
        static std::string out;
        static std::uint64_t seed = 0, attempts = OddSolverOptions{}.max_attempts;
        auto* gallai = dec->add_subcommand("gallai", "floor(n/2) decomposition of L1(m,k)");
        gallai->add_option("m", m)->required();
        gallai->add_option("k", k)->required();
        gallai->add_option("--out", out, "write decomposition JSON here");
        gallai->add_option("--seed", seed, "seed for the all-odd-degree search");
        gallai->add_option("--attempts", attempts, "restart budget for the all-odd-degree search");
        gallai->callback([&] {
            LeviGraph lg = build_levi(m, k);
            OddSolverOptions opts;
            opts.seed = seed;
            opts.max_attempts = attempts;
            auto [d, trace] = gallai_decompose(m, k, opts);
            std::cout << "size=" << d.size() << " bound=" << floor_bound(lg.graph.vertex_count())
                      << '\n';
            emit_decomposition(levi_to_json(lg), lg.graph, d, out);
            std::cout << "trace:\n" << trace.render(2);
        });
    }
    {
        static int m;
        static std::string out;
        auto* wal = dec->add_subcommand("walecki", "minimum decomposition of K_m");
        wal->add_option("m", m)->required();
        wal->add_option("--out", out, "write decomposition JSON here");
        wal->callback([&] {
            Graph g = build_complete(m);
            WaleckiDecomposition w = walecki(m);
            std::cout << "size=" << w.decomposition.size()
                      << " bound=" << edge_count_lower_bound(g) << '\n';
            emit_decomposition(graph_to_json(g, "plain", m), g, w.decomposition, out);
        });
    }
    {
        static int m;
        static std::string out;
        static bool certify = false;
        auto* minl = dec->add_subcommand("min-l1m2", "minimum decomposition of L1(m,2)");
        minl->add_option("m", m)->required();
        minl->add_option("--out", out, "write decomposition JSON here");
        minl->add_flag("--certify", certify, "re-verify and print the minimality certificate");
        minl->callback([&] {
            LeviGraph lg = build_levi(m, 2);
            Decomposition d = min_decompose_l1m2(m);
            std::cout << "size=" << d.size() << " bound=" << min_size_l1m2(m) << '\n';
            emit_decomposition(levi_to_json(lg), lg.graph, d, out);
            if (certify) {
                VerificationReport r = verify_decomposition(lg.graph, d);
                std::int64_t edge_lb = edge_count_lower_bound(lg.graph);
                int odd_lb = odd_vertex_lower_bound(lg.graph);
                bool minimal = r.ok && d.size() == edge_lb;
                std::cout << "certificate: verified=" << (r.ok ? "ok" : "fail")
                          << " max_path_len=" << max_path_length_bound(lg.graph)
                          << " edge_bound=" << edge_lb << " odd_bound=" << odd_lb
                          << " minimal=" << (minimal ? "yes" : "no") << '\n';
                if (!minimal) rc = 1;
            }
        });
    }

    // ---- verify ----
    {
        static std::string graph_file, decomp_file;
        auto* verify = app.add_subcommand("verify", "check a decomposition file against a graph file");
        verify->add_option("graph", graph_file)->required();
        verify->add_option("decomposition", decomp_file)->required();
        verify->callback([&] {
            Graph g = load_graph_arg(graph_file);
            LoadedDecomposition ld = decomposition_from_json(read_json_file(decomp_file));
            VerificationReport r = verify_decomposition(g, ld.decomposition);
            std::cout << r.render();
            if (!r.ok) rc = 1;
        });
    }

    // ---- pathnumber ----
    {
        static std::string graph_file;
        static std::uint64_t budget = 10'000'000;
        static bool witness = false;
        auto* pn = app.add_subcommand("pathnumber", "exact path number by exhaustive search");
        pn->add_option("graph", graph_file)->required();
        pn->add_option("--budget", budget, "node budget");
        pn->add_flag("--witness", witness, "print a minimum decomposition");
        pn->callback([&] {
            Graph g = load_graph_arg(graph_file);
            OracleResult r = exact_path_number(g, budget);
            if (r.status == OracleStatus::Exact) {
                std::cout << "pathnumber=" << r.path_number << " nodes=" << r.nodes_explored
                          << '\n';
            } else {
                std::cout << "status=budget-exceeded lower=" << r.best_lower
                          << " upper=" << r.best_upper << " nodes=" << r.nodes_explored << '\n';
                rc = 3;
            }
            if (witness) std::cout << render_decomposition(g, r.witness);
        });
    }

    // ---- bounds ----
    {
        static int m, k;
        auto* bounds = app.add_subcommand("bounds", "size bounds for L1(m,k), computed exactly");
        bounds->add_option("m", m)->required();
        bounds->add_option("k", k)->required();
        bounds->callback([&] {
            if (m < 2 || k < 2 || k > m)
                throw std::invalid_argument("bounds: needs m >= 2 and 2 <= k <= m");
            std::int64_t n = detail::checked_add(binomial(m, k - 1), binomial(m, k));
            std::int64_t edges = detail::checked_mul(k, binomial(m, k));
            std::int64_t odd =
                detail::checked_add((m - k + 1) % 2 == 1 ? binomial(m, k - 1) : 0,
                                    k % 2 == 1 ? binomial(m, k) : 0);
            std::cout << "n=" << n << " floor=" << floor_bound(n) << " ceil=" << gallai_bound(n)
                      << " edges=" << edges << " odd=" << odd / 2 << '\n';
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
