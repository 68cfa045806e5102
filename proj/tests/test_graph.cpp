#include <doctest.h>

#include "cm/errors.hpp"
#include "cm/graph.hpp"
#include "cm/oracle.hpp"
#include "cm/example_spaces.hpp"

using namespace cm;

TEST_CASE("natural distance of a path") {
    Graph g;
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    const MetricSpace s = natural_distance(g);
    CHECK(s.distance(0, 1) == ExtDistance(1));
    CHECK(s.distance(1, 2) == ExtDistance(1));
    CHECK(s.distance(0, 2) == ExtDistance(2));
}

TEST_CASE("the two-chain graph is connected exactly when bridged") {
    const MetricSpace bridged = natural_distance(figure1_graph(20, true));
    for (PointId x = 0; x < 40; ++x)
        for (PointId y = x + 1; y < 40; ++y) CHECK_FALSE(bridged.distance(x, y).is_infinite());

    const MetricSpace split = natural_distance(figure1_graph(20, false));
    CHECK(split.distance(0, 20).is_infinite());
    CHECK_FALSE(split.distance(0, 19).is_infinite());
}

TEST_CASE("connected components") {
    Graph path;
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(connected_components(path).size() == 1);

    Graph triangles;
    for (auto [u, v] : std::vector<std::pair<PointId, PointId>>{
             {0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        triangles.add_edge(u, v);
    const auto comps = connected_components(triangles);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<PointId>{0, 1, 2});
    CHECK(comps[1] == std::vector<PointId>{3, 4, 5});

    Graph edgeless;
    edgeless.vertex_count = 3;
    CHECK(connected_components(edgeless).size() == 3);
    CHECK_THROWS_AS((void)decide_graph(edgeless), Error);
}

TEST_CASE("induced subspaces carry their own d0") {
    SUBCASE("opposite corners of a square") {
        Graph c4;
        for (auto [u, v] :
             std::vector<std::pair<PointId, PointId>>{{0, 1}, {1, 2}, {2, 3}, {0, 3}})
            c4.add_edge(u, v);
        const Subspace sub = induced_subspace(natural_distance(c4), {0, 2});
        CHECK(sub.d0 == ExtDistance(2));
        CHECK(sub.space.distance(0, 1) == ExtDistance(2));
        const QuotientStructure q = build_quotient(sub.space, sub.d0);
        CHECK(class_count(q) == 1); // only constant contractive maps on A
    }
    SUBCASE("even points of a path chain by steps of two") {
        Graph p5;
        for (PointId i = 0; i < 4; ++i) p5.add_edge(i, i + 1);
        const Subspace sub = induced_subspace(natural_distance(p5), {0, 2, 4});
        CHECK(sub.d0 == ExtDistance(2));
        CHECK(class_count(build_quotient(sub.space, sub.d0)) == 1);
    }
    SUBCASE("a whole component is connected") {
        Graph g;
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        const Subspace sub = induced_subspace(natural_distance(g), {0, 1});
        CHECK(class_count(build_quotient(sub.space, sub.d0)) == 1);
    }
}

TEST_CASE("graph decision follows connectivity") {
    Graph connected;
    connected.add_edge(0, 1);
    connected.add_edge(1, 2);
    CHECK_FALSE(decide_graph(connected).exists);

    Graph two_edges;
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    const Decision d = decide_graph(two_edges);
    CHECK(d.exists);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->images() == std::vector<PointId>{0, 0, 1, 1});

    Graph single_edge;
    single_edge.add_edge(0, 1);
    CHECK_FALSE(decide_graph(single_edge).exists);
}

TEST_CASE("quotient classes equal connected components") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Graph g = random_graph(seed, 9);
        const MetricSpace s = natural_distance(g);
        REQUIRE(verify_metric_axioms(s).pass);
        const MinDistance m = min_positive_distance(s);
        CHECK(m.d0 == ExtDistance(1)); // an edge exists
        CHECK(build_quotient(s, m.d0).classes == connected_components(g));
    }
}

TEST_CASE("subgraph decisions agree with brute force on up to four vertices") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Graph g = random_graph(seed, 6);
        const MetricSpace s = natural_distance(g);
        // pick a deterministic subset of up to 4 vertices
        std::vector<PointId> subset;
        for (std::size_t v = 0; v < g.vertex_count && subset.size() < 4; v += 1 + seed % 2)
            subset.push_back(static_cast<PointId>(v));
        if (subset.size() < 2) continue;
        Subspace sub{MetricSpace::from_table({}), {}, ExtDistance::zero()};
        try {
            sub = induced_subspace(s, subset);
        } catch (const NoFiniteDistance&) {
            continue; // all-infinite restriction: analysis refuses, nothing to compare
        }
        if (sub.space.window_size() < 2) continue;
        const bool by_quotient =
            class_count(build_quotient(sub.space, sub.d0)) > 1;
        const bool by_oracle = enumerate_all_maps(sub.space).nonconstant_contractive_exists;
        CHECK(by_quotient == by_oracle);
    }
}

TEST_CASE("edge list parsing") {
    const Graph g = parse_edge_list("# a comment\n0 1\n\n2 3 # trailing\n");
    CHECK(g.vertex_count == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(3, 2));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK_THROWS_AS((void)parse_edge_list("0\n"), ParseError);
    CHECK_THROWS_AS((void)parse_edge_list("1 1\n"), ParseError);
}
