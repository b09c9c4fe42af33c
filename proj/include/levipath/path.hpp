#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "levi.hpp"

namespace levipath {

/// A sequence of pairwise-distinct vertex ids; consecutive pairs must be
/// edges of the ambient graph (checked by verify_path, not by the type).
struct Path {
    std::vector<VertexId> vertices;

    int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
    VertexId front() const { return vertices.front(); }
    VertexId back() const { return vertices.back(); }
};

/// A collection of paths claimed to partition a graph's edge set.
struct Decomposition {
    std::vector<Path> paths;

    int size() const { return static_cast<int>(paths.size()); }
};

enum class ViolationKind { NotAPath, DuplicateEdge, UncoveredEdge, ForeignEdge };

struct Violation {
    ViolationKind kind;
    int path_index = -1;
    int other_path_index = -1;  // second occurrence, for DuplicateEdge
    VertexId u = -1, v = -1;
    std::string detail;

    std::string str() const {
        std::ostringstream os;
        switch (kind) {
            case ViolationKind::NotAPath:
                os << "not-a-path path " << path_index << ": " << detail;
                break;
            case ViolationKind::DuplicateEdge:
                os << "duplicate-edge (" << u << "," << v << ") paths " << path_index
                   << " and " << other_path_index;
                break;
            case ViolationKind::UncoveredEdge:
                os << "uncovered-edge (" << u << "," << v << ")";
                break;
            case ViolationKind::ForeignEdge:
                os << "foreign-edge (" << u << "," << v << ") path " << path_index;
                break;
        }
        return os.str();
    }
};

struct VerificationReport {
    bool ok = false;
    std::vector<Violation> violations;
    int size = 0;                   // number of paths checked
    std::int64_t covered_edges = 0; // distinct graph edges covered
    std::vector<std::string> warnings;

    /// One violation per line, then "OK size=<s>" or "FAIL violations=<v>".
    std::string render() const {
        std::ostringstream os;
        for (const std::string& w : warnings) os << "warning: " << w << '\n';
        for (const Violation& x : violations) os << x.str() << '\n';
        if (ok)
            os << "OK size=" << size << '\n';
        else
            os << "FAIL violations=" << violations.size() << '\n';
        return os.str();
    }
};

namespace detail {

// Structural path checks shared by both verifiers. Appends violations;
// returns the canonical edges of well-formed consecutive pairs.
inline std::vector<Edge> check_path_shape(const Graph& g, const Path& p, int index,
                                          std::vector<Violation>& out,
                                          std::vector<std::string>& warnings) {
    std::vector<Edge> covered;
    if (p.vertices.empty()) {
        out.push_back({ViolationKind::NotAPath, index, -1, -1, -1, "empty vertex sequence"});
        return covered;
    }
    for (VertexId v : p.vertices) {
        if (!g.has_vertex(v)) {
            std::ostringstream os;
            os << "vertex id " << v << " out of range";
            out.push_back({ViolationKind::NotAPath, index, -1, -1, -1, os.str()});
            return covered;
        }
    }
    std::vector<VertexId> sorted = p.vertices;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) {
            std::ostringstream os;
            os << "repeated vertex " << sorted[i];
            out.push_back({ViolationKind::NotAPath, index, -1, -1, -1, os.str()});
            return covered;
        }
    }
    if (p.vertices.size() == 1) {
        std::ostringstream os;
        os << "path " << index << " has a single vertex and covers no edges";
        warnings.push_back(os.str());
    }
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        VertexId a = p.vertices[i - 1], b = p.vertices[i];
        if (!g.has_edge(a, b))
            out.push_back({ViolationKind::ForeignEdge, index, -1, std::min(a, b),
                           std::max(a, b), ""});
        else
            covered.emplace_back(a, b);
    }
    return covered;
}

}  // namespace detail

inline VerificationReport verify_path(const Graph& g, const Path& p) {
    VerificationReport r;
    r.size = 1;
    std::vector<Edge> covered = detail::check_path_shape(g, p, 0, r.violations, r.warnings);
    r.covered_edges = static_cast<std::int64_t>(covered.size());
    r.ok = r.violations.empty();
    return r;
}

/// Full decomposition check: every path well-formed, no edge used twice,
/// no non-edge used, every edge of g covered. All failures are enumerated.
inline VerificationReport verify_decomposition(const Graph& g, const Decomposition& d) {
    VerificationReport r;
    r.size = d.size();
    std::map<Edge, int> first_seen;
    for (int i = 0; i < d.size(); ++i) {
        std::vector<Edge> covered = detail::check_path_shape(
            g, d.paths[static_cast<std::size_t>(i)], i, r.violations, r.warnings);
        for (const Edge& e : covered) {
            auto [it, fresh] = first_seen.emplace(e, i);
            if (!fresh)
                r.violations.push_back({ViolationKind::DuplicateEdge, it->second, i, e.u, e.v, ""});
        }
    }
    r.covered_edges = static_cast<std::int64_t>(first_seen.size());
    for (const Edge& e : g.edges)
        if (!first_seen.count(e))
            r.violations.push_back({ViolationKind::UncoveredEdge, -1, -1, e.u, e.v, ""});
    r.ok = r.violations.empty();
    return r;
}

/// Prepends or appends new_vertex at the named endpoint. Violated
/// preconditions are construction bugs, reported as std::logic_error.
inline Path extend_at_endpoint(const Graph& g, const Path& p, VertexId endpoint,
                               VertexId new_vertex) {
    if (p.vertices.empty()) throw std::logic_error("extend_at_endpoint: empty path");
    if (p.front() != endpoint && p.back() != endpoint)
        throw std::logic_error("extend_at_endpoint: endpoint is not an end of the path");
    if (!g.has_edge(endpoint, new_vertex))
        throw std::logic_error("extend_at_endpoint: no such edge in the graph");
    if (std::find(p.vertices.begin(), p.vertices.end(), new_vertex) != p.vertices.end())
        throw std::logic_error("extend_at_endpoint: vertex already on the path");
    Path out = p;
    if (p.back() == endpoint)
        out.vertices.push_back(new_vertex);
    else
        out.vertices.insert(out.vertices.begin(), new_vertex);
    return out;
}

/// Replaces each step (u,v) of a path in K_m by u, {u,v}, v in L1(m,2).
inline Path subdivide_path(const Graph& km, const Path& p, const LeviGraph& target) {
    std::map<SubsetLabel, VertexId> index;
    for (VertexId i = 0; i < target.graph.vertex_count(); ++i)
        index.emplace(target.graph.labels[static_cast<std::size_t>(i)], i);
    Path out;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        const SubsetLabel& cur = km.labels[static_cast<std::size_t>(p.vertices[i])];
        if (cur.size() != 1)
            throw std::logic_error("subdivide_path: source vertices must carry singleton labels");
        if (i > 0) {
            const SubsetLabel& prev = km.labels[static_cast<std::size_t>(p.vertices[i - 1])];
            out.vertices.push_back(index.at(prev.with(cur.elems.front())));
        }
        out.vertices.push_back(index.at(cur));
    }
    return out;
}

inline Decomposition subdivide_decomposition(const Graph& km, const Decomposition& d,
                                             const LeviGraph& target) {
    Decomposition out;
    out.paths.reserve(d.paths.size());
    for (const Path& p : d.paths) out.paths.push_back(subdivide_path(km, p, target));
    return out;
}

/// Renders "P1: {1,3}, 1, {1,2}, 2, {2,3}" style listings, one path per line.
inline std::string render_decomposition(const Graph& g, const Decomposition& d) {
    std::ostringstream os;
    for (int i = 0; i < d.size(); ++i) {
        os << 'P' << (i + 1) << ':';
        const Path& p = d.paths[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < p.vertices.size(); ++j) {
            os << (j ? ", " : " ");
            os << g.labels[static_cast<std::size_t>(p.vertices[j])].str();
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace levipath
