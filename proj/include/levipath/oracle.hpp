#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "graph.hpp"
#include "path.hpp"

namespace levipath {

enum class OracleStatus { Exact, BudgetExceeded };

struct OracleResult {
    OracleStatus status = OracleStatus::BudgetExceeded;
    int path_number = 0;  // proven exact when status == Exact
    Decomposition witness;
    std::uint64_t nodes_explored = 0;
    int best_upper = 0, best_lower = 0;  // bracket on exhaustion
};

namespace detail {

/// Deterministic maximal-path extraction; always a valid decomposition,
/// used to seed the branch-and-bound with an upper bound.
inline Decomposition greedy_decomposition(const Graph& g) {
    const std::size_t e_count = g.edges.size();
    std::vector<char> covered(e_count, 0);
    // adjacency annotated with edge indices, ascending neighbor order
    std::vector<std::vector<std::pair<VertexId, int>>> adj(
        static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < e_count; ++i) {
        adj[static_cast<std::size_t>(g.edges[i].u)].emplace_back(g.edges[i].v, static_cast<int>(i));
        adj[static_cast<std::size_t>(g.edges[i].v)].emplace_back(g.edges[i].u, static_cast<int>(i));
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    Decomposition d;
    std::vector<char> in_path(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t start = 0; start < e_count; ++start) {
        if (covered[start]) continue;
        covered[start] = 1;
        std::vector<VertexId> verts{g.edges[start].u, g.edges[start].v};
        for (VertexId v : verts) in_path[static_cast<std::size_t>(v)] = 1;
        for (int end = 0; end < 2; ++end) {
            while (true) {
                VertexId cur = end == 0 ? verts.back() : verts.front();
                bool moved = false;
                for (auto [w, ei] : adj[static_cast<std::size_t>(cur)]) {
                    if (covered[static_cast<std::size_t>(ei)] || in_path[static_cast<std::size_t>(w)])
                        continue;
                    covered[static_cast<std::size_t>(ei)] = 1;
                    in_path[static_cast<std::size_t>(w)] = 1;
                    if (end == 0)
                        verts.push_back(w);
                    else
                        verts.insert(verts.begin(), w);
                    moved = true;
                    break;
                }
                if (!moved) break;
            }
        }
        for (VertexId v : verts) in_path[static_cast<std::size_t>(v)] = 0;
        d.paths.push_back(Path{std::move(verts)});
    }
    return d;
}

/// Exhaustive search over partial decompositions. One level covers the
/// lowest-indexed uncovered edge by every residual path through it (arms
/// grown from both endpoints, extensions tried in ascending neighbor order,
/// stopping allowed anywhere); prunes with residual lower bounds. Finds any
/// decomposition strictly smaller than initial_upper.
struct PathSearch {
    const Graph& g;
    int E;
    std::vector<std::vector<std::pair<VertexId, int>>> adj;
    std::vector<char> covered;
    std::vector<int> deg;
    Bipartition bp;

    std::uint64_t budget, nodes = 0;
    bool aborted = false;      // node budget exhausted
    bool stop_when_found = false;
    bool stopped = false;      // stop_when_found fired
    int incumbent;
    bool found = false;
    std::vector<std::vector<VertexId>> best, current;
    std::vector<char> in_path;
    int covered_count = 0;

    PathSearch(const Graph& graph, int initial_upper, std::uint64_t node_budget)
        : g(graph),
          E(static_cast<int>(graph.edges.size())),
          adj(static_cast<std::size_t>(graph.vertex_count())),
          covered(graph.edges.size(), 0),
          deg(static_cast<std::size_t>(graph.vertex_count()), 0),
          bp(two_color(graph)),
          budget(node_budget),
          incumbent(initial_upper),
          in_path(static_cast<std::size_t>(graph.vertex_count()), 0) {
        for (int i = 0; i < E; ++i) {
            const Edge& e = g.edges[static_cast<std::size_t>(i)];
            adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, i);
            adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, i);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        for (VertexId v = 0; v < g.vertex_count(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    }

    int residual_lower_bound() const {
        int rem = E - covered_count;
        if (rem == 0) return 0;
        int odd = 0;
        std::int64_t active0 = 0, active1 = 0;
        for (std::size_t v = 0; v < deg.size(); ++v) {
            if (deg[v] == 0) continue;
            if (deg[v] % 2 == 1) ++odd;
            if (bp.bipartite)
                (bp.color[v] == 0 ? active0 : active1)++;
            else
                ++active0;
        }
        std::int64_t max_len;
        if (bp.bipartite)
            max_len = active0 == active1 ? active0 + active1 - 1
                                         : 2 * std::min(active0, active1);
        else
            max_len = active0 - 1;
        std::int64_t by_edges = max_len > 0 ? (rem + max_len - 1) / max_len : rem;
        return static_cast<int>(std::max<std::int64_t>(odd / 2, by_edges));
    }

    void take(int ei) {
        covered[static_cast<std::size_t>(ei)] = 1;
        ++covered_count;
        --deg[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(ei)].u)];
        --deg[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(ei)].v)];
    }
    void untake(int ei) {
        covered[static_cast<std::size_t>(ei)] = 0;
        --covered_count;
        ++deg[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(ei)].u)];
        ++deg[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(ei)].v)];
    }

    struct Frame {
        VertexId u, v;
        std::vector<VertexId> front_arm, back_arm;
    };

    void run() { search(); }

    void search() {
        if (aborted || stopped) return;
        if (covered_count == E) {
            int count = static_cast<int>(current.size());
            if (count < incumbent) {
                incumbent = count;
                best = current;
                found = true;
                if (stop_when_found) stopped = true;
            }
            return;
        }
        int count = static_cast<int>(current.size());
        int lb = residual_lower_bound();
        if (count + lb >= incumbent) return;

        int ei = 0;
        while (covered[static_cast<std::size_t>(ei)]) ++ei;
        Frame fr{g.edges[static_cast<std::size_t>(ei)].u, g.edges[static_cast<std::size_t>(ei)].v, {}, {}};
        take(ei);
        in_path[static_cast<std::size_t>(fr.u)] = in_path[static_cast<std::size_t>(fr.v)] = 1;
        grow_front(fr);
        in_path[static_cast<std::size_t>(fr.u)] = in_path[static_cast<std::size_t>(fr.v)] = 0;
        untake(ei);
    }

    void grow_front(Frame& fr) {
        if (aborted || stopped) return;
        VertexId f = fr.front_arm.empty() ? fr.u : fr.front_arm.back();
        for (auto [w, ei] : adj[static_cast<std::size_t>(f)]) {
            if (covered[static_cast<std::size_t>(ei)] || in_path[static_cast<std::size_t>(w)]) continue;
            take(ei);
            in_path[static_cast<std::size_t>(w)] = 1;
            fr.front_arm.push_back(w);
            grow_front(fr);
            fr.front_arm.pop_back();
            in_path[static_cast<std::size_t>(w)] = 0;
            untake(ei);
            if (aborted || stopped) return;
        }
        grow_back(fr);
    }

    void grow_back(Frame& fr) {
        if (aborted || stopped) return;
        VertexId b = fr.back_arm.empty() ? fr.v : fr.back_arm.back();
        for (auto [w, ei] : adj[static_cast<std::size_t>(b)]) {
            if (covered[static_cast<std::size_t>(ei)] || in_path[static_cast<std::size_t>(w)]) continue;
            take(ei);
            in_path[static_cast<std::size_t>(w)] = 1;
            fr.back_arm.push_back(w);
            grow_back(fr);
            fr.back_arm.pop_back();
            in_path[static_cast<std::size_t>(w)] = 0;
            untake(ei);
            if (aborted || stopped) return;
        }
        place(fr);
    }

    void place(Frame& fr) {
        if (++nodes >= budget) {
            aborted = true;
            return;
        }
        std::vector<VertexId> verts;
        verts.reserve(fr.front_arm.size() + 2 + fr.back_arm.size());
        verts.insert(verts.end(), fr.front_arm.rbegin(), fr.front_arm.rend());
        verts.push_back(fr.u);
        verts.push_back(fr.v);
        verts.insert(verts.end(), fr.back_arm.begin(), fr.back_arm.end());
        // the placed path must not block vertex reuse by later paths
        for (VertexId x : verts) in_path[static_cast<std::size_t>(x)] = 0;
        current.push_back(verts);
        search();
        current.pop_back();
        for (VertexId x : verts) in_path[static_cast<std::size_t>(x)] = 1;
    }

    Decomposition best_decomposition() const {
        Decomposition d;
        for (const auto& pv : best) d.paths.push_back(Path{pv});
        return d;
    }
};

}  // namespace detail

/// Exact path number by exhaustive branch-and-bound; feasible up to roughly
/// 30 edges. Deterministic for a fixed input.
inline OracleResult exact_path_number(const Graph& g, std::uint64_t node_budget = 10'000'000) {
    OracleResult r;
    Decomposition greedy = detail::greedy_decomposition(g);
    detail::PathSearch search(g, greedy.size(), node_budget);
    r.best_lower = search.residual_lower_bound();
    search.run();
    r.nodes_explored = search.nodes;
    r.path_number = search.incumbent;
    r.witness = search.found ? search.best_decomposition() : std::move(greedy);
    r.best_upper = search.incumbent;
    if (!search.aborted || search.incumbent == r.best_lower) {
        r.status = OracleStatus::Exact;
        r.best_lower = search.incumbent;
    } else {
        r.status = OracleStatus::BudgetExceeded;
    }
    return r;
}

enum class Tightness { Minimal, NotMinimal, Unknown };

struct TightnessResult {
    Tightness verdict = Tightness::Unknown;
    std::optional<Decomposition> smaller_witness;
    std::uint64_t nodes_explored = 0;
};

/// Minimal iff exhaustive search proves nothing smaller than the given
/// decomposition exists; Unknown on budget exhaustion.
inline TightnessResult check_tightness(const Graph& g, const Decomposition& constructed,
                                       std::uint64_t node_budget = 10'000'000) {
    TightnessResult r;
    detail::PathSearch search(g, constructed.size(), node_budget);
    int root_lb = search.residual_lower_bound();
    search.run();
    r.nodes_explored = search.nodes;
    if (search.found) {
        r.verdict = Tightness::NotMinimal;
        r.smaller_witness = search.best_decomposition();
    } else if (!search.aborted || constructed.size() == root_lb) {
        r.verdict = Tightness::Minimal;
    } else {
        r.verdict = Tightness::Unknown;
    }
    return r;
}

}  // namespace levipath
