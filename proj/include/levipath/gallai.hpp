#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "graph.hpp"
#include "levi.hpp"
#include "oracle.hpp"
#include "path.hpp"
#include "rng.hpp"

namespace levipath {

struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Star decomposition of L1(m,m) = K_{1,m}: leaves in id order pair up
/// through the center y, P_i: x_{2i-1}, y, x_{2i}; odd m leaves a final
/// single-edge path (y, x_m). Size is ceil(m/2).
inline Decomposition star_decompose(int m) {
    if (m < 2) throw std::invalid_argument("star_decompose: m must be >= 2");
    Decomposition d;
    const VertexId center = m;  // B vertex of build_levi(m,m); leaves are ids 0..m-1
    for (int i = 1; 2 * i <= m; ++i) d.paths.push_back(Path{{2 * i - 2, center, 2 * i - 1}});
    if (m % 2 == 1) d.paths.push_back(Path{{center, m - 1}});
    return d;
}

enum class GallaiCase { Star, KEquals2, AllOdd, KOddMEven, KEven };

inline const char* gallai_case_name(GallaiCase c) {
    switch (c) {
        case GallaiCase::Star: return "star";
        case GallaiCase::KEquals2: return "k2";
        case GallaiCase::AllOdd: return "all-odd";
        case GallaiCase::KOddMEven: return "k-odd-m-even";
        case GallaiCase::KEven: return "k-even";
    }
    return "?";
}

struct Attachment {
    Edge crossing;
    int path_index;
    VertexId endpoint;
};

/// The recursion tree of a construction, as data: which case fired at each
/// (m,k), the sub-decomposition sizes, and where every crossing edge landed.
struct ConstructionTrace {
    int m = 0, k = 0;
    GallaiCase case_taken = GallaiCase::Star;
    int size = 0;
    std::vector<ConstructionTrace> subtraces;
    std::vector<Attachment> attachments;

    std::string render(int indent = 0) const {
        std::ostringstream os;
        std::string pad(static_cast<std::size_t>(indent), ' ');
        os << pad << "L1(" << m << ',' << k << ") case=" << gallai_case_name(case_taken)
           << " size=" << size << '\n';
        for (const ConstructionTrace& t : subtraces) os << t.render(indent + 2);
        for (const Attachment& a : attachments)
            os << pad << "  attach (" << a.crossing.u << ',' << a.crossing.v << ") -> path "
               << a.path_index << " at " << a.endpoint << '\n';
        return os.str();
    }
};

struct OddSolverOptions {
    std::uint64_t seed = 0;
    std::uint64_t max_attempts = 60000;
    int endgame_max_edges = 14;
    std::uint64_t endgame_node_budget = 40000;
    int repairs_per_attempt = 20;
};

namespace detail {

struct OddSolverState {
    const Graph& g;
    std::vector<std::vector<std::pair<VertexId, int>>> adj;
    std::vector<char> covered;
    std::vector<int> deg;
    std::vector<int> visit_mark;
    int visit_stamp = 0;
    int edges_left;
    std::vector<std::vector<VertexId>> paths;
    std::vector<std::vector<int>> path_edges;  // per path, for undo

    explicit OddSolverState(const Graph& graph)
        : g(graph),
          adj(static_cast<std::size_t>(graph.vertex_count())),
          visit_mark(static_cast<std::size_t>(graph.vertex_count()), 0),
          edges_left(static_cast<int>(graph.edges.size())) {
        for (std::size_t i = 0; i < graph.edges.size(); ++i) {
            const Edge& e = graph.edges[i];
            adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, static_cast<int>(i));
            adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, static_cast<int>(i));
        }
        reset();
    }

    void reset() {
        covered.assign(g.edges.size(), 0);
        deg.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        for (VertexId v = 0; v < g.vertex_count(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
        edges_left = static_cast<int>(g.edges.size());
        paths.clear();
        path_edges.clear();
    }

    void commit(std::vector<VertexId> verts, std::vector<int> edge_ids) {
        for (int ei : edge_ids) {
            covered[static_cast<std::size_t>(ei)] = 1;
            --deg[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(ei)].u)];
            --deg[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(ei)].v)];
        }
        edges_left -= static_cast<int>(edge_ids.size());
        paths.push_back(std::move(verts));
        path_edges.push_back(std::move(edge_ids));
    }

    void undo_last() {
        for (int ei : path_edges.back()) {
            covered[static_cast<std::size_t>(ei)] = 0;
            ++deg[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(ei)].u)];
            ++deg[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(ei)].v)];
        }
        edges_left += static_cast<int>(path_edges.back().size());
        paths.pop_back();
        path_edges.pop_back();
    }
};

}  // namespace detail

/// Path decomposition of size exactly n/2 for a connected graph with every
/// vertex of odd degree (such a decomposition always exists; n is even by
/// the handshake lemma).
///
/// Strategy: extract one path at a time by a seeded random walk that starts
/// at an odd-residual-degree vertex and is trimmed back to end at one, so the
/// set of odd vertices shrinks by exactly two per path and the count lands on
/// n/2 by itself. Small residuals are finished by the exact search engine,
/// dead ends undo recent paths, and a fresh restart begins when repairs run
/// out. Deterministic for a fixed seed. Throws BudgetExceededError when no
/// decomposition is found within max_attempts restarts.
inline Decomposition odd_graph_decompose(const Graph& g, const OddSolverOptions& opt = {}) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw std::invalid_argument("odd_graph_decompose: graph must be connected");
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) % 2 == 0)
            throw std::invalid_argument("odd_graph_decompose: every vertex must have odd degree");
    if (n % 2 != 0) throw std::logic_error("odd_graph_decompose: odd vertex count");

    SplitMix64 rng(opt.seed);
    detail::OddSolverState st(g);
    std::vector<VertexId> odd_pool, walk;
    std::vector<int> walk_edges;
    std::vector<std::pair<VertexId, int>> cand;

    for (std::uint64_t attempt = 0; attempt < opt.max_attempts; ++attempt) {
        st.reset();
        int repairs = opt.repairs_per_attempt;
        bool dead = false;
        while (st.edges_left > 0 && !dead) {
            // exact finish once the residual is small
            if (st.edges_left <= opt.endgame_max_edges) {
                std::vector<Edge> rest;
                for (std::size_t i = 0; i < st.covered.size(); ++i)
                    if (!st.covered[i]) rest.push_back(g.edges[i]);
                Graph residual = make_graph(g.labels, std::move(rest));
                int odd_rem = 0;
                for (VertexId v = 0; v < n; ++v)
                    if (residual.degree(v) % 2 == 1) ++odd_rem;
                detail::PathSearch finish(residual, odd_rem / 2 + 1, opt.endgame_node_budget);
                finish.stop_when_found = true;
                finish.run();
                if (finish.found) {
                    for (const auto& pv : finish.best) st.paths.push_back(pv);
                    st.edges_left = 0;
                    break;
                }
            } else {
                odd_pool.clear();
                for (VertexId v = 0; v < n; ++v)
                    if (st.deg[static_cast<std::size_t>(v)] % 2 == 1) odd_pool.push_back(v);
                if (!odd_pool.empty()) {
                    bool committed = false;
                    for (int retry = 0; retry < 4 && !committed; ++retry) {
                        VertexId u;
                        if (rng.below(3) == 0) {
                            u = odd_pool[0];
                            for (VertexId v : odd_pool)
                                if (st.deg[static_cast<std::size_t>(v)] < st.deg[static_cast<std::size_t>(u)]) u = v;
                        } else {
                            u = odd_pool[static_cast<std::size_t>(rng.below(odd_pool.size()))];
                        }
                        walk.assign(1, u);
                        walk_edges.clear();
                        ++st.visit_stamp;
                        st.visit_mark[static_cast<std::size_t>(u)] = st.visit_stamp;
                        VertexId cur = u;
                        while (true) {
                            cand.clear();
                            for (auto [w, ei] : st.adj[static_cast<std::size_t>(cur)])
                                if (!st.covered[static_cast<std::size_t>(ei)] &&
                                    st.visit_mark[static_cast<std::size_t>(w)] != st.visit_stamp)
                                    cand.emplace_back(w, ei);
                            if (cand.empty()) break;
                            auto [w, ei] = cand[static_cast<std::size_t>(rng.below(cand.size()))];
                            walk.push_back(w);
                            walk_edges.push_back(ei);
                            st.visit_mark[static_cast<std::size_t>(w)] = st.visit_stamp;
                            cur = w;
                        }
                        // trim back so the path ends on an odd vertex
                        int cut = -1;
                        for (int j = static_cast<int>(walk.size()) - 1; j >= 1; --j) {
                            if (st.deg[static_cast<std::size_t>(walk[static_cast<std::size_t>(j)])] % 2 == 1) {
                                cut = j;
                                if (cut > 1 && rng.below(8) == 0) continue;  // occasionally shorter
                                break;
                            }
                        }
                        if (cut < 1) continue;
                        walk.resize(static_cast<std::size_t>(cut) + 1);
                        walk_edges.resize(static_cast<std::size_t>(cut));
                        st.commit(walk, walk_edges);
                        committed = true;
                    }
                    if (committed) continue;
                }
                // stuck: no odd start or no trimmable walk
            }
            if (repairs-- > 0 && !st.paths.empty())
                st.undo_last();
            else
                dead = true;
        }
        if (!dead && st.edges_left == 0) {
            Decomposition d;
            for (auto& pv : st.paths) d.paths.push_back(Path{std::move(pv)});
            if (d.size() != n / 2)
                throw std::logic_error("odd_graph_decompose: size invariant violated");
            return d;
        }
    }
    std::ostringstream os;
    os << "odd_graph_decompose: no size-" << n / 2 << " decomposition within "
       << opt.max_attempts << " attempts";
    throw BudgetExceededError(os.str());
}

namespace detail {

// One crossing-edge attachment. Hosts are scanned in ascending path order,
// tail end before head end; extend_at_endpoint re-checks adjacency and
// vertex absence, and used slots may not repeat.
inline int attach_crossing(const Graph& g, std::vector<Path>& paths,
                           std::set<std::pair<int, int>>& used_slots, VertexId at,
                           VertexId add) {
    for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
        Path& p = paths[static_cast<std::size_t>(i)];
        if (p.vertices.size() < 2) continue;
        if (p.back() == at && !used_slots.count({i, 1})) {
            p = extend_at_endpoint(g, p, at, add);
            used_slots.insert({i, 1});
            return i;
        }
        if (p.front() == at && !used_slots.count({i, 0})) {
            p = extend_at_endpoint(g, p, at, add);
            used_slots.insert({i, 0});
            return i;
        }
    }
    throw std::logic_error("attach_crossing: no path ends at the required vertex");
}

inline Decomposition map_decomposition(const Decomposition& canonical, const IsoMap& iso,
                                       const std::vector<VertexId>& to_parent) {
    std::vector<VertexId> inverse(iso.forward.size(), -1);
    for (std::size_t i = 0; i < iso.forward.size(); ++i)
        inverse[static_cast<std::size_t>(iso.forward[i])] = static_cast<VertexId>(i);
    Decomposition out;
    out.paths.reserve(canonical.paths.size());
    for (const Path& p : canonical.paths) {
        Path q;
        q.vertices.reserve(p.vertices.size());
        for (VertexId v : p.vertices)
            q.vertices.push_back(to_parent[static_cast<std::size_t>(
                inverse[static_cast<std::size_t>(v)])]);
        out.paths.push_back(std::move(q));
    }
    return out;
}

/// Case dispatch for one top-level construction. Decompositions of the
/// canonical L1(m,k) are memoized per (m,k) and relabeled through the
/// partition isomorphisms wherever a subgraph needs them.
struct GallaiBuilder {
    OddSolverOptions solver;
    std::map<std::pair<int, int>, std::pair<Decomposition, ConstructionTrace>> memo;

    const std::pair<Decomposition, ConstructionTrace>& decompose(int m, int k) {
        auto key = std::make_pair(m, k);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        std::pair<Decomposition, ConstructionTrace> result;
        if (k == m) {
            result.first = star_decompose(m);
            result.second = ConstructionTrace{m, k, GallaiCase::Star, result.first.size(), {}, {}};
        } else if (k == 2) {
            result = k2_node(m);
        } else if (k % 2 == 1 && m % 2 == 1) {
            LeviGraph lg = build_levi(m, k);
            result.first = odd_graph_decompose(lg.graph, solver);
            result.second = ConstructionTrace{m, k, GallaiCase::AllOdd, result.first.size(), {}, {}};
        } else {
            result = split_node(m, k);
        }

        const std::int64_t n = binomial(m, k - 1) + binomial(m, k);
        if (result.first.size() > floor_bound(n))
            throw std::logic_error("gallai: size exceeds floor(n/2)");
        return memo.emplace(key, std::move(result)).first->second;
    }

    std::pair<Decomposition, ConstructionTrace> k2_node(int m) {
        if (m == 3) {
            // base decomposition of the hexagon L1(3,2):
            //   {1,3}, 1, {1,2}, 2, {2,3}  and  {1,3}, 3, {2,3}
            Decomposition d;
            d.paths.push_back(Path{{4, 0, 3, 1, 5}});
            d.paths.push_back(Path{{4, 2, 5}});
            return {d, ConstructionTrace{3, 2, GallaiCase::KEquals2, 2, {}, {}}};
        }

        LeviGraph lg = build_levi(m, 2);
        LeviPartition part = partition_levi(lg);
        const auto& [sub_d, sub_t] = decompose(m - 1, 2);
        IsoMap uiso = ulg_to_levi(part, m, 2);
        Decomposition d = map_decomposition(sub_d, uiso, part.ulg.to_parent);

        // LLG is the star centered at {m} with the B2 vertices as leaves.
        const VertexId center = part.a2.at(0);
        const std::vector<VertexId>& leaves = part.b2;
        const int t = static_cast<int>(leaves.size());  // m-1 leaves
        for (int i = 1; 2 * i <= t; ++i)
            d.paths.push_back(Path{{leaves[static_cast<std::size_t>(2 * i - 2)], center,
                                    leaves[static_cast<std::size_t>(2 * i - 1)]}});
        if (t % 2 == 1)
            d.paths.push_back(Path{{center, leaves[static_cast<std::size_t>(t - 1)]}});

        ConstructionTrace trace{m, 2, GallaiCase::KEquals2, 0, {}, {}};
        trace.subtraces.push_back(sub_t);
        trace.subtraces.push_back(
            ConstructionTrace{m - 1, m - 1, GallaiCase::Star, (t + 1) / 2, {}, {}});

        // each crossing edge ({i}, {i,m}) joins its star path at the leaf
        std::set<std::pair<int, int>> used;
        for (const Edge& e : part.crossing) {
            int idx = attach_crossing(lg.graph, d.paths, used, e.v, e.u);
            trace.attachments.push_back(Attachment{e, idx, e.v});
        }
        trace.size = d.size();
        return {std::move(d), std::move(trace)};
    }

    std::pair<Decomposition, ConstructionTrace> split_node(int m, int k) {
        LeviGraph lg = build_levi(m, k);
        LeviPartition part = partition_levi(lg);
        const bool attach_in_ulg = k % 2 == 1;  // k odd, m even; else k even
        if (attach_in_ulg && (m % 2 != 0 || (m - k) % 2 != 1))
            throw std::logic_error("gallai: parity premise violated in k-odd-m-even case");

        const auto& [ulg_d, ulg_t] = decompose(m - 1, k);
        const auto& [llg_d, llg_t] = decompose(m - 1, k - 1);
        IsoMap uiso = ulg_to_levi(part, m, k);
        IsoMap liso = llg_to_levi(part, m, k);

        Decomposition d = map_decomposition(ulg_d, uiso, part.ulg.to_parent);
        const int ulg_count = d.size();
        Decomposition lifted_llg = map_decomposition(llg_d, liso, part.llg.to_parent);
        for (Path& p : lifted_llg.paths) d.paths.push_back(std::move(p));

        ConstructionTrace trace{m, k,
                                attach_in_ulg ? GallaiCase::KOddMEven : GallaiCase::KEven,
                                0, {}, {}};
        trace.subtraces.push_back(ulg_t);
        trace.subtraces.push_back(llg_t);

        std::vector<VertexId> parent_to_local(static_cast<std::size_t>(lg.graph.vertex_count()), -1);
        const InducedPart& host_part = attach_in_ulg ? part.ulg : part.llg;
        for (std::size_t i = 0; i < host_part.to_parent.size(); ++i)
            parent_to_local[static_cast<std::size_t>(host_part.to_parent[i])] =
                static_cast<VertexId>(i);

        std::set<std::pair<int, int>> used;
        for (const Edge& e : part.crossing) {
            // e.u is the A1 vertex, e.v the B2 vertex labeled label(u)+{m}
            VertexId at = attach_in_ulg ? e.u : e.v;
            VertexId add = attach_in_ulg ? e.v : e.u;
            int host_deg = host_part.graph.degree(parent_to_local[static_cast<std::size_t>(at)]);
            if (host_deg % 2 != 1)
                throw std::logic_error("gallai: attachment target has even degree in its side");
            int idx = attach_crossing(lg.graph, d.paths, used, at, add);
            if (attach_in_ulg ? idx >= ulg_count : idx < ulg_count)
                throw std::logic_error("gallai: crossing edge attached to the wrong family");
            trace.attachments.push_back(Attachment{e, idx, at});
        }
        trace.size = d.size();
        return {std::move(d), std::move(trace)};
    }
};

}  // namespace detail

/// The k = 2 recursion: ULG handled by the smaller instance, LLG by the star
/// rule, crossing edges absorbed at the star leaves.
inline std::pair<Decomposition, ConstructionTrace> decompose_k2(int m) {
    if (m < 2) throw std::invalid_argument("decompose_k2: m must be >= 2");
    detail::GallaiBuilder b;
    return b.decompose(m, 2);
}

/// Path decomposition of L1(m,k) of size at most floor(n/2), with the
/// recursion tree that produced it. The all-odd case uses the seeded solver;
/// pass options to change its seed or budget.
inline std::pair<Decomposition, ConstructionTrace> gallai_decompose(
    int m, int k, const OddSolverOptions& solver = {}) {
    if (m < 2 || k < 2 || k > m)
        throw std::invalid_argument("gallai_decompose: needs m >= 2 and 2 <= k <= m");
    detail::GallaiBuilder b;
    b.solver = solver;
    return b.decompose(m, k);
}

}  // namespace levipath
