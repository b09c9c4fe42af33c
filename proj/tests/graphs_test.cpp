#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "levipath/binomial.hpp"
#include "levipath/graph.hpp"
#include "levipath/levi.hpp"

using namespace levipath;

namespace {

// Independent edge oracle: enumerate all (subset, superset) pairs directly.
std::set<std::pair<SubsetLabel, SubsetLabel>> containment_pairs(int m, int k) {
    std::set<std::pair<SubsetLabel, SubsetLabel>> out;
    for (const SubsetLabel& a : subsets_of_size(m, k - 1))
        for (const SubsetLabel& b : subsets_of_size(m, k))
            if (a.subset_of(b)) out.emplace(a, b);
    return out;
}

}  // namespace

TEST_CASE("subset labels") {
    CHECK(label_of({3, 1}).elems == std::vector<int>{1, 3});
    CHECK(SubsetLabel{{1, 3}}.str() == "{1,3}");
    CHECK(SubsetLabel{{4}}.str() == "4");
    CHECK(SubsetLabel{{1, 3}}.with(2).elems == std::vector<int>{1, 2, 3});
    CHECK(SubsetLabel{{1, 2, 4}}.without(2).elems == std::vector<int>{1, 4});
    CHECK(SubsetLabel{{1, 2}}.subset_of(SubsetLabel{{1, 2, 3}}));
    CHECK_FALSE(SubsetLabel{{1, 4}}.subset_of(SubsetLabel{{1, 2, 3}}));
    CHECK(valid_subset_label(SubsetLabel{{1, 3}}, 3));
    CHECK_FALSE(valid_subset_label(SubsetLabel{{3, 1}}, 3));
    CHECK_FALSE(valid_subset_label(SubsetLabel{{0, 1}}, 3));

    auto subs = subsets_of_size(4, 2);
    REQUIRE(subs.size() == 6);
    CHECK(subs.front().elems == std::vector<int>{1, 2});
    CHECK(subs[2].elems == std::vector<int>{1, 4});
    CHECK(subs.back().elems == std::vector<int>{3, 4});
    CHECK(std::is_sorted(subs.begin(), subs.end()));
}

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(2, -1) == 0);
    CHECK(binomial(3, 7) == 0);
    CHECK(binomial(60, 30) == 118264581564861424LL);
    CHECK_THROWS_AS(binomial(80, 40), std::overflow_error);
    // Pascal recurrence over a grid
    for (int n = 1; n <= 30; ++n)
        for (int r = 0; r <= n; ++r)
            CHECK(binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r));
}

TEST_CASE("build_complete") {
    Graph k1 = build_complete(1);
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);

    Graph k4 = build_complete(4);
    CHECK(k4.edge_count() == 6);

    Graph k6 = build_complete(6);
    CHECK(k6.edge_count() == 15);
    for (VertexId v = 0; v < 6; ++v) CHECK(k6.degree(v) == 5);
    CHECK(k6.labels[5].str() == "6");

    CHECK_THROWS_AS(build_complete(0), std::invalid_argument);
}

TEST_CASE("build_levi basic instances") {
    LeviGraph l43 = build_levi(4, 3);
    CHECK(l43.a_size() == 6);
    CHECK(l43.b_size() == 4);
    CHECK(l43.graph.vertex_count() == 10);
    CHECK(l43.graph.edge_count() == 12);
    for (VertexId v = 0; v < 10; ++v)
        CHECK(l43.graph.degree(v) == (l43.side[static_cast<std::size_t>(v)] == Side::A ? 2 : 3));

    LeviGraph l22 = build_levi(2, 2);
    CHECK(l22.graph.vertex_count() == 3);
    CHECK(l22.graph.edge_count() == 2);
    CHECK(l22.graph.labels[0].elems == std::vector<int>{1});
    CHECK(l22.graph.labels[2].elems == std::vector<int>{1, 2});

    LeviGraph l53 = build_levi(5, 3);
    CHECK(l53.graph.vertex_count() == 20);
    CHECK(l53.graph.edge_count() == 30);
    for (VertexId v = 0; v < 20; ++v) CHECK(l53.graph.degree(v) == 3);

    CHECK_THROWS_AS(build_levi(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_levi(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_levi(4, 5), std::invalid_argument);
}

TEST_CASE("levi adjacency equals containment enumeration") {
    for (int m = 2; m <= 6; ++m) {
        for (int k = 2; k <= m; ++k) {
            LeviGraph lg = build_levi(m, k);
            auto pairs = containment_pairs(m, k);
            REQUIRE(lg.graph.edge_count() == static_cast<std::int64_t>(pairs.size()));
            for (const Edge& e : lg.graph.edges) {
                CHECK(pairs.count({lg.graph.labels[static_cast<std::size_t>(e.u)],
                                   lg.graph.labels[static_cast<std::size_t>(e.v)]}) == 1);
            }
        }
    }
}

TEST_CASE("levi vertex ordering is label-lexicographic per side") {
    LeviGraph lg = build_levi(5, 3);
    for (int v = 1; v < lg.graph.vertex_count(); ++v) {
        Side p = lg.side[static_cast<std::size_t>(v - 1)], c = lg.side[static_cast<std::size_t>(v)];
        if (p == c)
            CHECK(lg.graph.labels[static_cast<std::size_t>(v - 1)] <
                  lg.graph.labels[static_cast<std::size_t>(v)]);
        else
            CHECK((p == Side::A && c == Side::B));
    }
}

TEST_CASE("levi structural sweep") {
    for (int m = 2; m <= 9; ++m) {
        for (int k = 2; k <= m; ++k) {
            CAPTURE(m);
            CAPTURE(k);
            LeviGraph lg = build_levi(m, k);
            CHECK(lg.graph.edge_count() == k * binomial(m, k));
            CHECK(lg.graph.edge_count() == (m - k + 1) * binomial(m, k - 1));
            CHECK(is_connected(lg.graph));
            if (m > 8) continue;  // girth scan is quadratic-ish
            if (k <= m - 1)
                CHECK(shortest_cycle_length(lg.graph) == 6);
            else
                CHECK(shortest_cycle_length(lg.graph) == 0);  // star
        }
    }
}

TEST_CASE("partition of the k=2 graph") {
    LeviGraph lg = build_levi(4, 2);
    LeviPartition p = partition_levi(lg);

    // crossing edges: (1,{1,4}), (2,{2,4}), (3,{3,4})
    std::vector<Edge> expected{{0, 6}, {1, 8}, {2, 9}};
    CHECK(p.crossing == expected);
    CHECK(p.a1 == std::vector<VertexId>{0, 1, 2});
    CHECK(p.a2 == std::vector<VertexId>{3});
    CHECK(p.b2 == std::vector<VertexId>{6, 8, 9});

    // LLG is the star on 4, {1,4}, {2,4}, {3,4}
    CHECK(p.llg.graph.vertex_count() == 4);
    CHECK(p.llg.graph.edge_count() == 3);
    CHECK(p.llg.to_parent == std::vector<VertexId>{3, 6, 8, 9});
    CHECK(p.llg.graph.degree(0) == 3);

    // ULG is a hexagon
    CHECK(p.ulg.graph.vertex_count() == 6);
    CHECK(p.ulg.graph.edge_count() == 6);
    CHECK(shortest_cycle_length(p.ulg.graph) == 6);
}

TEST_CASE("partition invariants and crossing matching") {
    for (int m = 2; m <= 7; ++m) {
        for (int k = 2; k <= m; ++k) {
            CAPTURE(m);
            CAPTURE(k);
            LeviGraph lg = build_levi(m, k);
            LeviPartition p = partition_levi(lg);

            CHECK(static_cast<std::int64_t>(p.crossing.size()) == binomial(m - 1, k - 1));
            CHECK(p.crossing.size() == p.a1.size());
            CHECK(p.crossing.size() == p.b2.size());

            // set difference definition, computed independently
            std::set<Edge> non_crossing;
            auto add_edges = [&](const InducedPart& part) {
                for (const Edge& e : part.graph.edges)
                    non_crossing.insert(Edge(part.to_parent[static_cast<std::size_t>(e.u)],
                                             part.to_parent[static_cast<std::size_t>(e.v)]));
            };
            add_edges(p.llg);
            add_edges(p.ulg);
            std::set<Edge> crossing_set(p.crossing.begin(), p.crossing.end());
            CHECK(non_crossing.size() + crossing_set.size() == lg.graph.edges.size());
            for (const Edge& e : lg.graph.edges)
                CHECK((non_crossing.count(e) + crossing_set.count(e)) == 1);

            // matching: u -> label(u) + {m} is a bijection a1 -> b2
            std::set<VertexId> ends_a, ends_b;
            for (const Edge& e : p.crossing) {
                const SubsetLabel& lu = lg.graph.labels[static_cast<std::size_t>(e.u)];
                const SubsetLabel& lv = lg.graph.labels[static_cast<std::size_t>(e.v)];
                CHECK(lu.with(m) == lv);
                CHECK(ends_a.insert(e.u).second);
                CHECK(ends_b.insert(e.v).second);
            }
            CHECK(ends_a == std::set<VertexId>(p.a1.begin(), p.a1.end()));
            CHECK(ends_b == std::set<VertexId>(p.b2.begin(), p.b2.end()));
        }
    }
}

TEST_CASE("degenerate partition at k = m") {
    LeviGraph lg = build_levi(3, 3);
    LeviPartition p = partition_levi(lg);
    CHECK(p.b1.empty());
    CHECK(p.a1.size() == 1);
    CHECK(lg.graph.labels[static_cast<std::size_t>(p.a1[0])].elems == std::vector<int>{1, 2});
    CHECK(p.b2.size() == 1);
    CHECK(lg.graph.labels[static_cast<std::size_t>(p.b2[0])].elems == std::vector<int>{1, 2, 3});
    CHECK(p.crossing.size() == 1);
}

TEST_CASE("llg is the next smaller levi graph") {
    LeviGraph lg = build_levi(4, 3);
    LeviPartition p = partition_levi(lg);
    IsoMap iso = llg_to_levi(p, 4, 3);
    CHECK(is_graph_isomorphism(p.llg.graph, iso));

    // {1,4} -> {1}, {1,2,4} -> {1,2}
    auto local_of = [&](const SubsetLabel& l) {
        return p.llg.graph.find_label(l).value();
    };
    CHECK(iso.target.labels[static_cast<std::size_t>(
                                iso.forward[static_cast<std::size_t>(local_of(SubsetLabel{{1, 4}}))])]
              .elems == std::vector<int>{1});
    CHECK(iso.target.labels[static_cast<std::size_t>(iso.forward[static_cast<std::size_t>(
                                local_of(SubsetLabel{{1, 2, 4}}))])]
              .elems == std::vector<int>{1, 2});

    CHECK_THROWS_AS(llg_to_levi(p, 4, 2), std::invalid_argument);
}

TEST_CASE("llg vertex count identity") {
    for (int m = 3; m <= 10; ++m)
        for (int k = 3; k <= m; ++k) {
            LeviGraph lg = build_levi(m, k);
            LeviPartition p = partition_levi(lg);
            CHECK(p.llg.graph.vertex_count() == binomial(m - 1, k - 2) + binomial(m - 1, k - 1));
        }
}

TEST_CASE("llg of a star maps to a star") {
    LeviGraph lg = build_levi(5, 5);
    LeviPartition p = partition_levi(lg);
    IsoMap iso = llg_to_levi(p, 5, 5);
    CHECK(is_graph_isomorphism(p.llg.graph, iso));
    CHECK(iso.target.vertex_count() == 5);  // K_{1,4}
    CHECK(iso.target.edge_count() == 4);
}

TEST_CASE("ulg is the same-k levi graph on one fewer element") {
    LeviGraph l42 = build_levi(4, 2);
    LeviPartition p42 = partition_levi(l42);
    IsoMap iso42 = ulg_to_levi(p42, 4, 2);
    CHECK(is_graph_isomorphism(p42.ulg.graph, iso42));
    CHECK(iso42.target.vertex_count() == 6);
    CHECK(shortest_cycle_length(iso42.target) == 6);

    LeviGraph l43 = build_levi(4, 3);
    LeviPartition p43 = partition_levi(l43);
    IsoMap iso43 = ulg_to_levi(p43, 4, 3);
    CHECK(is_graph_isomorphism(p43.ulg.graph, iso43));
    CHECK(iso43.target.vertex_count() == 4);  // L1(3,3) = K_{1,3}
    CHECK(iso43.target.edge_count() == 3);

    CHECK_THROWS_AS(ulg_to_levi(p43, 4, 4), std::invalid_argument);
}

TEST_CASE("ulg edge count identity") {
    for (int m = 3; m <= 9; ++m)
        for (int k = 2; k <= m - 1; ++k) {
            LeviGraph lg = build_levi(m, k);
            LeviPartition p = partition_levi(lg);
            CHECK(p.ulg.graph.edge_count() == k * binomial(m - 1, k));
        }
}

TEST_CASE("both iso maps are edge-exact across the sweep") {
    for (int m = 3; m <= 8; ++m)
        for (int k = 2; k <= m; ++k) {
            CAPTURE(m);
            CAPTURE(k);
            LeviGraph lg = build_levi(m, k);
            LeviPartition p = partition_levi(lg);
            if (k >= 3) CHECK(is_graph_isomorphism(p.llg.graph, llg_to_levi(p, m, k)));
            if (k <= m - 1) CHECK(is_graph_isomorphism(p.ulg.graph, ulg_to_levi(p, m, k)));
        }
}

TEST_CASE("make_graph validation") {
    std::vector<SubsetLabel> labels{SubsetLabel{{1}}, SubsetLabel{{2}}};
    CHECK_THROWS_AS(make_graph(labels, {Edge(0, 1), Edge(1, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(labels, {Edge(0, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(Edge(1, 1), std::invalid_argument);

    Graph g = make_graph(labels, {Edge(1, 0)});
    CHECK(g.has_edge(0, 1));
    CHECK(g.edges[0].u == 0);  // canonical orientation
}
