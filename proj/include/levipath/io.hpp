#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "graph.hpp"
#include "levi.hpp"
#include "path.hpp"

namespace levipath {

using nlohmann::json;

/// Graph file: { "kind": "levi"|"plain", "m": int?, "k": int?,
///   "vertices": [ {"id": n, "label": [..], "side": "A"|"B"?}, .. ],
///   "edges": [ [u,v], .. ] }  with edges smaller-id-first, sorted.
struct LoadedGraph {
    Graph graph;
    std::string kind = "plain";
    std::optional<int> m, k;
    std::optional<std::vector<Side>> side;
};

inline json graph_to_json(const Graph& g, const std::string& kind = "plain",
                          std::optional<int> m = std::nullopt,
                          std::optional<int> k = std::nullopt,
                          const std::vector<Side>* side = nullptr) {
    json j;
    j["kind"] = kind;
    if (m) j["m"] = *m;
    if (k) j["k"] = *k;
    j["vertices"] = json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        json jv;
        jv["id"] = v;
        jv["label"] = g.labels[static_cast<std::size_t>(v)].elems;
        if (side) jv["side"] = (*side)[static_cast<std::size_t>(v)] == Side::A ? "A" : "B";
        j["vertices"].push_back(std::move(jv));
    }
    j["edges"] = json::array();
    for (const Edge& e : g.edges) j["edges"].push_back(json::array({e.u, e.v}));
    return j;
}

inline json levi_to_json(const LeviGraph& lg) {
    return graph_to_json(lg.graph, "levi", lg.m, lg.k, &lg.side);
}

inline LoadedGraph graph_from_json(const json& j) {
    LoadedGraph out;
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph file: expected object with vertices and edges");
    out.kind = j.value("kind", std::string("plain"));
    if (j.contains("m")) out.m = j.at("m").get<int>();
    if (j.contains("k")) out.k = j.at("k").get<int>();

    const json& jv = j.at("vertices");
    std::vector<SubsetLabel> labels(jv.size());
    std::vector<Side> sides(jv.size(), Side::A);
    std::vector<char> seen(jv.size(), 0);
    bool any_side = false;
    for (const json& v : jv) {
        int id = v.at("id").get<int>();
        if (id < 0 || id >= static_cast<int>(jv.size()) || seen[static_cast<std::size_t>(id)])
            throw std::invalid_argument("graph file: vertex ids must be dense 0..n-1");
        seen[static_cast<std::size_t>(id)] = 1;
        SubsetLabel l{v.at("label").get<std::vector<int>>()};
        for (std::size_t i = 1; i < l.elems.size(); ++i)
            if (l.elems[i] <= l.elems[i - 1])
                throw std::invalid_argument("graph file: label must be strictly increasing");
        labels[static_cast<std::size_t>(id)] = std::move(l);
        if (v.contains("side")) {
            any_side = true;
            sides[static_cast<std::size_t>(id)] =
                v.at("side").get<std::string>() == "A" ? Side::A : Side::B;
        }
    }
    std::vector<Edge> edges;
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph file: edge must be a pair");
        int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        if (a == b) throw std::invalid_argument("graph file: self-loop");
        edges.emplace_back(a, b);
    }
    out.graph = make_graph(std::move(labels), std::move(edges));
    if (any_side) out.side = std::move(sides);
    return out;
}

/// Decomposition file: { "graph": <inline graph object or file name>,
///   "paths": [ [vertex-id, ...], ... ] }
inline json decomposition_to_json(const json& graph_json, const Decomposition& d) {
    json j;
    j["graph"] = graph_json;
    j["paths"] = json::array();
    for (const Path& p : d.paths) j["paths"].push_back(p.vertices);
    return j;
}

struct LoadedDecomposition {
    Decomposition decomposition;
    std::optional<LoadedGraph> graph;      // when inline
    std::optional<std::string> graph_ref;  // when a file name
};

inline LoadedDecomposition decomposition_from_json(const json& j) {
    LoadedDecomposition out;
    if (!j.is_object() || !j.contains("paths"))
        throw std::invalid_argument("decomposition file: expected object with paths");
    for (const json& p : j.at("paths"))
        out.decomposition.paths.push_back(Path{p.get<std::vector<VertexId>>()});
    if (j.contains("graph")) {
        if (j.at("graph").is_string())
            out.graph_ref = j.at("graph").get<std::string>();
        else
            out.graph = graph_from_json(j.at("graph"));
    }
    return out;
}

/// DOT export. Vertex names are rendered labels; Levi sides become same-rank
/// groups so layouts come out bipartite.
inline std::string to_dot(const Graph& g, const std::string& name = "g",
                          const std::vector<Side>* side = nullptr) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    if (side) {
        os << "  rankdir=LR;\n";
        for (int want = 0; want < 2; ++want) {
            os << "  { rank=same;";
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (((*side)[static_cast<std::size_t>(v)] == Side::A) == (want == 0))
                    os << " \"" << g.labels[static_cast<std::size_t>(v)].str() << "\";";
            os << " }\n";
        }
    } else {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            os << "  \"" << g.labels[static_cast<std::size_t>(v)].str() << "\";\n";
    }
    for (const Edge& e : g.edges)
        os << "  \"" << g.labels[static_cast<std::size_t>(e.u)].str() << "\" -- \""
           << g.labels[static_cast<std::size_t>(e.v)].str() << "\";\n";
    os << "}\n";
    return os.str();
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

}  // namespace levipath
