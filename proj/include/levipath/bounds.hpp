#pragma once

#include <cstdint>
#include <stdexcept>

#include "binomial.hpp"
#include "graph.hpp"

namespace levipath {

/// ceil(n/2): the classic upper-bound target for connected n-vertex graphs.
inline std::int64_t gallai_bound(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("gallai_bound: n must be >= 1");
    return (n + 1) / 2;
}

/// floor(n/2): the sharper target the Levi-graph constructions meet.
inline std::int64_t floor_bound(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("floor_bound: n must be >= 1");
    return n / 2;
}

/// Every odd-degree vertex must end some path, so (#odd)/2 paths are needed.
inline int odd_vertex_lower_bound(const Graph& g) {
    int odd = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 == 1) ++odd;
    if (odd % 2 != 0) throw std::logic_error("odd_vertex_lower_bound: odd count not even");
    return odd / 2;
}

/// Longest possible path (in edges). Bipartite parts of sizes p <= q allow
/// at most 2p edges when q > p, else n-1; non-bipartite graphs allow n-1.
inline std::int64_t max_path_length_bound(const Graph& g) {
    const std::int64_t n = g.vertex_count();
    if (n <= 1) return 0;
    Bipartition bp = two_color(g);
    if (!bp.bipartite) return n - 1;
    std::int64_t lo = std::min(bp.part0, bp.part1);
    std::int64_t hi = std::max(bp.part0, bp.part1);
    return hi > lo ? 2 * lo : n - 1;
}

/// ceil(|E| / max path length): no decomposition can be smaller.
inline std::int64_t edge_count_lower_bound(const Graph& g) {
    std::int64_t e = g.edge_count();
    if (e == 0) return 0;
    std::int64_t len = max_path_length_bound(g);
    return (e + len - 1) / len;
}

namespace detail {
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("checked_add: value exceeds 64 bits");
    return out;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("checked_mul: value exceeds 64 bits");
    return out;
}
}  // namespace detail

/// floor((C(m,k-1)+C(m,k))/2) + floor((C(m,k-2)+C(m,k-1))/2)
///   <= floor((C(m+1,k-1)+C(m+1,k))/2),
/// evaluated exactly with overflow-checked integers.
inline bool pascal_floor_holds(int m, int k) {
    if (k < 1 || k > m) throw std::invalid_argument("pascal_floor_holds: needs 1 <= k <= m");
    std::int64_t lhs = detail::checked_add(
        detail::checked_add(binomial(m, k - 1), binomial(m, k)) / 2,
        detail::checked_add(binomial(m, k - 2), binomial(m, k - 1)) / 2);
    std::int64_t rhs = detail::checked_add(binomial(m + 1, k - 1), binomial(m + 1, k)) / 2;
    return lhs <= rhs;
}

}  // namespace levipath
