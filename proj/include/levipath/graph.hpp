#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "subset.hpp"

namespace levipath {

using VertexId = int;

/// Undirected edge, always stored with the smaller id first.
struct Edge {
    VertexId u, v;

    Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) throw std::invalid_argument("Edge: self-loop");
    }

    auto operator<=>(const Edge&) const = default;
};

/// Finite simple undirected graph with labeled vertices.
/// Vertex ids are dense 0..n-1; edges and adjacency lists are kept sorted.
struct Graph {
    std::vector<SubsetLabel> labels;
    std::vector<std::vector<VertexId>> adj;
    std::vector<Edge> edges;

    int vertex_count() const { return static_cast<int>(labels.size()); }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }

    bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }

    bool has_edge(VertexId a, VertexId b) const {
        if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
        return std::binary_search(adj[static_cast<std::size_t>(a)].begin(),
                                  adj[static_cast<std::size_t>(a)].end(), b);
    }

    int degree(VertexId v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }

    /// Vertex id carrying the given label, or nullopt. Linear scan; callers
    /// that map many labels should build an index once.
    std::optional<VertexId> find_label(const SubsetLabel& l) const {
        for (VertexId i = 0; i < vertex_count(); ++i)
            if (labels[static_cast<std::size_t>(i)] == l) return i;
        return std::nullopt;
    }
};

/// Builds a Graph from labels and an edge list, validating simplicity.
inline Graph make_graph(std::vector<SubsetLabel> labels, std::vector<Edge> edges) {
    Graph g;
    g.labels = std::move(labels);
    const int n = g.vertex_count();
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u < 0 || e.v >= n)
            throw std::invalid_argument("make_graph: edge endpoint out of range");
        if (i > 0 && edges[i - 1] == e)
            throw std::invalid_argument("make_graph: duplicate edge");
    }
    g.edges = std::move(edges);
    g.adj.assign(static_cast<std::size_t>(n), {});
    for (const Edge& e : g.edges) {
        g.adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

/// Complete graph K_m; vertex labels are the integers 1..m.
inline Graph build_complete(int m) {
    if (m < 1) throw std::invalid_argument("build_complete: m must be >= 1");
    std::vector<SubsetLabel> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) labels.push_back(SubsetLabel{{i}});
    std::vector<Edge> edges;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) edges.emplace_back(a, b);
    return make_graph(std::move(labels), std::move(edges));
}

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : g.adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == n;
}

struct Bipartition {
    bool bipartite = false;
    std::vector<char> color;  // 0/1 per vertex; valid only if bipartite
    std::int64_t part0 = 0, part1 = 0;
};

/// BFS 2-coloring; component roots are colored 0, so the result is
/// deterministic for a fixed vertex order.
inline Bipartition two_color(const Graph& g) {
    const int n = g.vertex_count();
    Bipartition bp;
    bp.color.assign(static_cast<std::size_t>(n), -1);
    for (VertexId s = 0; s < n; ++s) {
        if (bp.color[static_cast<std::size_t>(s)] != -1) continue;
        bp.color[static_cast<std::size_t>(s)] = 0;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : g.adj[static_cast<std::size_t>(v)]) {
                if (bp.color[static_cast<std::size_t>(w)] == -1) {
                    bp.color[static_cast<std::size_t>(w)] =
                        static_cast<char>(1 - bp.color[static_cast<std::size_t>(v)]);
                    q.push(w);
                } else if (bp.color[static_cast<std::size_t>(w)] ==
                           bp.color[static_cast<std::size_t>(v)]) {
                    return bp;  // odd cycle
                }
            }
        }
    }
    bp.bipartite = true;
    for (char c : bp.color) (c == 0 ? bp.part0 : bp.part1)++;
    return bp;
}

/// Length of a shortest cycle, or 0 if the graph is acyclic.
/// BFS from every vertex; the minimum over all start vertices is exact.
inline int shortest_cycle_length(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<VertexId> parent(static_cast<std::size_t>(n));
    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        parent[static_cast<std::size_t>(s)] = -1;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : g.adj[static_cast<std::size_t>(v)]) {
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    q.push(w);
                } else if (w != parent[static_cast<std::size_t>(v)]) {
                    int len = dist[static_cast<std::size_t>(v)] +
                              dist[static_cast<std::size_t>(w)] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

}  // namespace levipath
