#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "bounds.hpp"
#include "gallai.hpp"
#include "levi.hpp"
#include "path.hpp"
#include "walecki.hpp"

namespace levipath {

/// One merge step: at the path end whose one-subset is {at_vertex}, attach
/// the edge joining it to the two-subset {pair_lo, pair_hi}.
struct MergeMove {
    int at_vertex;
    int pair_lo, pair_hi;
};

/// The two edges of the short path that path i absorbs, for odd m >= 5.
/// Path P*_i ends at the one-subsets {i} and {i+1}. The table is the whole
/// rule: the regular alternating pattern, plus three rewired paths at the
/// top of the range when (m-1)/2 is odd.
inline std::array<MergeMove, 2> merge_moves_for_path(int m, int i) {
    if (m < 5 || m % 2 == 0) throw std::invalid_argument("merge_moves_for_path: m must be odd, >= 5");
    const int q = (m - 1) / 2;
    if (i < 1 || i > q) throw std::invalid_argument("merge_moves_for_path: i must be in 1..(m-1)/2");
    if (q % 2 == 1 && i >= q - 2) {
        if (i == q - 2) return {MergeMove{q - 2, q - 2, q - 1}, MergeMove{q - 1, q - 1, q}};
        if (i == q - 1) return {MergeMove{q - 1, q - 2, q - 1}, MergeMove{q, q, q + 1}};
        return {MergeMove{q, q - 1, q}, MergeMove{q + 1, q, q + 1}};
    }
    if (i % 2 == 1) return {MergeMove{i, i, i + 1}, MergeMove{i + 1, i + 1, i + 2}};
    return {MergeMove{i, i - 1, i}, MergeMove{i + 1, i, i + 1}};
}

/// Minimum path decomposition of L1(m,2).
///   - even m: subdivide the m/2 Hamiltonian paths of K_m; size m/2.
///   - odd m >= 5: subdivide the modified family, then spread the short
///     path's m-1 edges across the other paths, two each; size (m-1)/2.
///   - m = 3: the hexagon needs two paths (a single path of six edges would
///     need seven distinct vertices), so the k=2 construction is returned.
inline Decomposition min_decompose_l1m2(int m) {
    if (m < 2) throw std::invalid_argument("min_decompose_l1m2: m must be >= 2");
    LeviGraph target = build_levi(m, 2);
    if (m == 3) return decompose_k2(3).first;

    Graph km = build_complete(m);
    WaleckiDecomposition w = walecki(m);
    Decomposition d = subdivide_decomposition(km, w.decomposition, target);
    if (m % 2 == 0) return d;

    // odd m: the last path is 1, {1,2}, 2, ..., (m-1)/2, {...}, (m+1)/2;
    // every one of its edges is claimed by exactly one merge move.
    Path short_path = d.paths.back();
    d.paths.pop_back();
    std::vector<Edge> moved;
    for (std::size_t i = 1; i < short_path.vertices.size(); ++i)
        moved.emplace_back(short_path.vertices[i - 1], short_path.vertices[i]);

    std::vector<char> claimed(moved.size(), 0);
    const int q = (m - 1) / 2;
    for (int i = 1; i <= q; ++i) {
        Path& host = d.paths[static_cast<std::size_t>(i - 1)];
        for (const MergeMove& mv : merge_moves_for_path(m, i)) {
            VertexId one = target.graph.find_label(SubsetLabel{{mv.at_vertex}}).value();
            VertexId two = target.graph.find_label(SubsetLabel{{mv.pair_lo, mv.pair_hi}}).value();
            Edge e(one, two);
            bool found = false;
            for (std::size_t j = 0; j < moved.size(); ++j)
                if (moved[j] == e) {
                    if (claimed[j]) throw std::logic_error("min_decompose_l1m2: edge moved twice");
                    claimed[j] = 1;
                    found = true;
                }
            if (!found) throw std::logic_error("min_decompose_l1m2: move is not a short-path edge");
            host = extend_at_endpoint(target.graph, host, one, two);
        }
    }
    for (char c : claimed)
        if (!c) throw std::logic_error("min_decompose_l1m2: short-path edge left behind");
    return d;
}

/// The certified path number of L1(m,2): floor(m/2) except the m = 3
/// hexagon, whose path number is 2. The value is recomputed as the
/// edge-count lower bound (which the constructions meet exactly, and which
/// at m = 3 encodes that a 6-edge path would need 7 distinct vertices) and
/// cross-checked against the closed form.
inline int min_size_l1m2(int m) {
    if (m < 2) throw std::invalid_argument("min_size_l1m2: m must be >= 2");
    std::int64_t bound = edge_count_lower_bound(build_levi(m, 2).graph);
    if (bound != (m == 3 ? 2 : m / 2))
        throw std::logic_error("min_size_l1m2: bound disagrees with the closed form");
    return static_cast<int>(bound);
}

}  // namespace levipath
