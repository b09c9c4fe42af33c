#pragma once

#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "path.hpp"

namespace levipath {

enum class WaleckiKind { Even, OddModified };

/// Minimum path decomposition of K_m. Even m: m/2 Hamiltonian paths from the
/// modular position formula. Odd m: the even family on K_{m-1}, each path
/// closed into a cycle through m and reopened by removing (i,i+1), plus one
/// short path made of the removed edges.
struct WaleckiDecomposition {
    int m = 0;
    Decomposition decomposition;  // over build_complete(m), 0-based ids
    WaleckiKind kind = WaleckiKind::Even;
};

namespace detail {
// Reduce into 1..m; residue 0 is reported as m.
inline int mod_1_to_m(int value, int m) {
    int r = value % m;
    if (r <= 0) r += m;
    return r;
}
}  // namespace detail

/// Vertex label (1..m) at 0-based position pos of path i, for even m.
/// Even positions 2j hold i-j, odd positions 2j+1 hold i+j+1 (both mod m,
/// residue 0 reported as m), so each path runs i, i+1, i-1, i+2, i-2, ...
inline int position_vertex(int i, int pos, int m) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("position_vertex: m must be even, >= 2");
    if (i < 1 || i > m / 2) throw std::invalid_argument("position_vertex: i must be in 1..m/2");
    if (pos < 0 || pos >= m) throw std::invalid_argument("position_vertex: pos must be in 0..m-1");
    if (pos % 2 == 0) return detail::mod_1_to_m(i - pos / 2, m);
    return detail::mod_1_to_m(i + (pos - 1) / 2 + 1, m);
}

inline WaleckiDecomposition walecki_even(int m) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("walecki_even: m must be even, >= 2");
    WaleckiDecomposition w;
    w.m = m;
    w.kind = WaleckiKind::Even;
    for (int i = 1; i <= m / 2; ++i) {
        Path p;
        p.vertices.reserve(static_cast<std::size_t>(m));
        for (int pos = 0; pos < m; ++pos) p.vertices.push_back(position_vertex(i, pos, m) - 1);
        w.decomposition.paths.push_back(std::move(p));
    }
    return w;
}

inline WaleckiDecomposition walecki_odd(int m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("walecki_odd: m must be odd, >= 3");
    WaleckiDecomposition base = walecki_even(m - 1);
    WaleckiDecomposition w;
    w.m = m;
    w.kind = WaleckiKind::OddModified;
    const int half = (m - 1) / 2;
    for (int i = 1; i <= half; ++i) {
        // Path i of K_{m-1} starts at i, ends at i + (m-1)/2, and its first
        // edge is (i, i+1). Closing it through vertex m and dropping that
        // first edge is a rotation: i+1, ..., i+(m-1)/2, m, i.
        const Path& p = base.decomposition.paths[static_cast<std::size_t>(i - 1)];
        Path q;
        q.vertices.assign(p.vertices.begin() + 1, p.vertices.end());
        q.vertices.push_back(m - 1);      // vertex m, id m-1
        q.vertices.push_back(p.vertices.front());
        w.decomposition.paths.push_back(std::move(q));
    }
    Path removed;  // the deleted edges (i, i+1) line up as 1, 2, ..., half+1
    for (int v = 1; v <= half + 1; ++v) removed.vertices.push_back(v - 1);
    w.decomposition.paths.push_back(std::move(removed));
    return w;
}

/// Dispatch by parity; the result always has ceil(m/2) paths.
inline WaleckiDecomposition walecki(int m) {
    if (m < 2) throw std::invalid_argument("walecki: m must be >= 2");
    return m % 2 == 0 ? walecki_even(m) : walecki_odd(m);
}

}  // namespace levipath
