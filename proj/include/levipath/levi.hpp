#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "binomial.hpp"
#include "graph.hpp"
#include "subset.hpp"

namespace levipath {

enum class Side : unsigned char { A, B };

/// Bipartite incidence graph of (k-1)-element vs k-element subsets of [m],
/// adjacent iff properly contained. Vertex order is fixed: side A in
/// lexicographic label order, then side B likewise.
struct LeviGraph {
    Graph graph;
    int m = 0, k = 0;
    std::vector<Side> side;

    std::int64_t a_size() const { return binomial(m, k - 1); }
    std::int64_t b_size() const { return binomial(m, k); }
};

inline LeviGraph build_levi(int m, int k) {
    if (m < 2) throw std::invalid_argument("build_levi: m must be >= 2");
    if (k < 2 || k > m) throw std::invalid_argument("build_levi: k must be in 2..m");

    LeviGraph lg;
    lg.m = m;
    lg.k = k;

    std::vector<SubsetLabel> labels = subsets_of_size(m, k - 1);
    const int a_count = static_cast<int>(labels.size());
    std::vector<SubsetLabel> b_labels = subsets_of_size(m, k);
    labels.insert(labels.end(), b_labels.begin(), b_labels.end());

    std::map<SubsetLabel, VertexId> a_index;
    for (VertexId i = 0; i < a_count; ++i) a_index.emplace(labels[static_cast<std::size_t>(i)], i);

    std::vector<Edge> edges;
    for (VertexId b = a_count; b < static_cast<int>(labels.size()); ++b) {
        const SubsetLabel& superset = labels[static_cast<std::size_t>(b)];
        for (int e : superset.elems) edges.emplace_back(a_index.at(superset.without(e)), b);
    }

    lg.graph = make_graph(std::move(labels), std::move(edges));
    lg.side.assign(static_cast<std::size_t>(lg.graph.vertex_count()), Side::B);
    for (VertexId i = 0; i < a_count; ++i) lg.side[static_cast<std::size_t>(i)] = Side::A;
    return lg;
}

/// A vertex-induced subgraph with dense local ids plus the map back to the
/// ids of the graph it was cut from.
struct InducedPart {
    Graph graph;
    std::vector<VertexId> to_parent;  // local id -> parent id, ascending
};

inline InducedPart induced_subgraph(const Graph& parent, std::vector<VertexId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    std::vector<VertexId> to_local(static_cast<std::size_t>(parent.vertex_count()), -1);
    std::vector<SubsetLabel> labels;
    labels.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        to_local[static_cast<std::size_t>(vertices[i])] = static_cast<VertexId>(i);
        labels.push_back(parent.labels[static_cast<std::size_t>(vertices[i])]);
    }
    std::vector<Edge> edges;
    for (const Edge& e : parent.edges) {
        VertexId lu = to_local[static_cast<std::size_t>(e.u)];
        VertexId lv = to_local[static_cast<std::size_t>(e.v)];
        if (lu != -1 && lv != -1) edges.emplace_back(lu, lv);
    }
    InducedPart part;
    part.graph = make_graph(std::move(labels), std::move(edges));
    part.to_parent = std::move(vertices);
    return part;
}

/// The three-way split of a Levi graph: LLG induced on vertices whose label
/// contains m, ULG on the rest, and the crossing edges between them.
/// Crossing edges pair each A1 vertex S with the B2 vertex S + {m}.
struct LeviPartition {
    InducedPart llg, ulg;
    std::vector<Edge> crossing;                // parent ids, sorted
    std::vector<VertexId> a1, a2, b1, b2;      // parent ids, ascending
};

inline LeviPartition partition_levi(const LeviGraph& lg) {
    LeviPartition p;
    const Graph& g = lg.graph;
    std::vector<VertexId> lower, upper;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool has_m = g.labels[static_cast<std::size_t>(v)].contains(lg.m);
        bool is_a = lg.side[static_cast<std::size_t>(v)] == Side::A;
        (has_m ? lower : upper).push_back(v);
        (is_a ? (has_m ? p.a2 : p.a1) : (has_m ? p.b2 : p.b1)).push_back(v);
    }
    p.llg = induced_subgraph(g, std::move(lower));
    p.ulg = induced_subgraph(g, std::move(upper));
    for (const Edge& e : g.edges) {
        bool um = g.labels[static_cast<std::size_t>(e.u)].contains(lg.m);
        bool vm = g.labels[static_cast<std::size_t>(e.v)].contains(lg.m);
        if (um != vm) p.crossing.push_back(e);
    }
    return p;
}

/// Vertex bijection onto a target graph, preserving adjacency both ways.
struct IsoMap {
    std::vector<VertexId> forward;  // source id -> target id
    Graph target;
};

/// LLG of L1(m,k) is L1(m-1,k-1): strip m from every label.
inline IsoMap llg_to_levi(const LeviPartition& p, int m, int k) {
    if (m < 3 || k < 3) throw std::invalid_argument("llg_to_levi: needs m >= 3 and k >= 3");
    LeviGraph target = build_levi(m - 1, k - 1);
    std::map<SubsetLabel, VertexId> index;
    for (VertexId i = 0; i < target.graph.vertex_count(); ++i)
        index.emplace(target.graph.labels[static_cast<std::size_t>(i)], i);
    IsoMap iso;
    iso.forward.reserve(p.llg.graph.labels.size());
    for (const SubsetLabel& l : p.llg.graph.labels) iso.forward.push_back(index.at(l.without(m)));
    iso.target = std::move(target.graph);
    return iso;
}

/// ULG of L1(m,k) is L1(m-1,k): labels are untouched, only ids shift.
inline IsoMap ulg_to_levi(const LeviPartition& p, int m, int k) {
    if (m < 3) throw std::invalid_argument("ulg_to_levi: needs m >= 3");
    if (k > m - 1) throw std::invalid_argument("ulg_to_levi: needs k <= m-1");
    LeviGraph target = build_levi(m - 1, k);
    std::map<SubsetLabel, VertexId> index;
    for (VertexId i = 0; i < target.graph.vertex_count(); ++i)
        index.emplace(target.graph.labels[static_cast<std::size_t>(i)], i);
    IsoMap iso;
    iso.forward.reserve(p.ulg.graph.labels.size());
    for (const SubsetLabel& l : p.ulg.graph.labels) iso.forward.push_back(index.at(l));
    iso.target = std::move(target.graph);
    return iso;
}

/// True iff the map is a bijection that maps edges onto edges exactly.
inline bool is_graph_isomorphism(const Graph& source, const IsoMap& iso) {
    if (static_cast<int>(iso.forward.size()) != source.vertex_count()) return false;
    if (source.vertex_count() != iso.target.vertex_count()) return false;
    std::vector<char> hit(static_cast<std::size_t>(iso.target.vertex_count()), 0);
    for (VertexId t : iso.forward) {
        if (t < 0 || t >= iso.target.vertex_count() || hit[static_cast<std::size_t>(t)]) return false;
        hit[static_cast<std::size_t>(t)] = 1;
    }
    if (source.edge_count() != iso.target.edge_count()) return false;
    for (const Edge& e : source.edges)
        if (!iso.target.has_edge(iso.forward[static_cast<std::size_t>(e.u)],
                                 iso.forward[static_cast<std::size_t>(e.v)]))
            return false;
    return true;
}

}  // namespace levipath
