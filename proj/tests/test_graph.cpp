#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "orclique/errors.hpp"
#include "orclique/graph.hpp"
#include "orclique/solver.hpp"
#include "test_util.hpp"

using namespace orclique;

namespace {

Graph from_text(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

} // namespace

TEST_CASE("edge list parsing") {
    Graph p3 = from_text("0 1\n1 2");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK(!p3.adjacent(0, 2));

    Graph empty = from_text("");
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);

    CHECK_THROWS_AS(from_text("0 0"), ValidationError);
    CHECK_THROWS_AS(from_text("0 1\n1 0"), ValidationError); // duplicate, reversed
    CHECK_THROWS_AS(from_text("0 1\n0 1"), ValidationError);
    CHECK_THROWS_AS(from_text("0 x"), ParseError);
    CHECK_THROWS_AS(from_text("7"), ParseError);

    // header: declared vertex count keeps isolated vertices
    Graph with_header = from_text("5 1\n0 1");
    CHECK(with_header.vertex_count() == 5);
    CHECK(with_header.edge_count() == 1);

    // not a header (ids exceed the would-be n): plain edges
    Graph no_header = from_text("2 1\n0 1");
    CHECK(no_header.vertex_count() == 2); // header n=2 m=1, edge 0-1

    Graph comments = from_text("# a comment\n\n0 1 # trailing\n");
    CHECK(comments.vertex_count() == 2);
    CHECK(comments.edge_count() == 1);

    // line numbers in errors
    try {
        from_text("0 1\n2 2");
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("dimacs parsing") {
    Graph p3 = dimacs("p edge 3 2\ne 1 2\ne 2 3");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));

    CHECK_THROWS_AS(dimacs("p edge 2 1\ne 1 3"), ValidationError); // id out of range
    CHECK_THROWS_AS(dimacs("e 1 2"), ParseError);                  // e before p
    CHECK_THROWS_AS(dimacs("p edge 2 1\np edge 2 1\ne 1 2"), ParseError);
    CHECK_THROWS_AS(dimacs("p edge 3 2\ne 1 2"), ParseError); // m mismatch
    CHECK_THROWS_AS(dimacs("p edge 2 1\ne 1 1"), ValidationError);

    Graph k4 = dimacs("c complete graph\np edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4");
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            CHECK(k4.adjacent(u, v));
}

TEST_CASE("encoding size") {
    CHECK(encoding_size(Graph::from_edges(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}})) == 10);
    CHECK(encoding_size(Graph(0)) == 0);
    Graph big(1024);
    Graph big_with_edge = Graph::from_edges(1024, std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(encoding_size(big_with_edge) == 1034);
    // 1-vertex and 2-vertex graphs use the log floor of 1 bit
    CHECK(encoding_size(Graph(1)) == 1);
    CHECK(encoding_size(Graph::from_edges(2, std::vector<std::pair<int, int>>{{0, 1}})) == 3);
}

TEST_CASE("induced subgraph") {
    std::vector<std::pair<int, int>> k4_edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            k4_edges.emplace_back(u, v);
    Graph k4 = Graph::from_edges(4, k4_edges);
    auto [k3, map] = induced_subgraph(k4, VertexSet::of({0, 1, 2}, 4));
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(map == std::vector<int>{0, 1, 2});

    auto [none, none_map] = induced_subgraph(k4, VertexSet::of({}, 4));
    CHECK(none.vertex_count() == 0);
    CHECK(none_map.empty());

    Graph c5;
    {
        std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
        c5 = Graph::from_edges(5, e);
    }
    auto [pair, pair_map] = induced_subgraph(c5, VertexSet::of({0, 2}, 5));
    CHECK(pair.vertex_count() == 2);
    CHECK(pair.edge_count() == 0);

    // adjacency preservation on random graphs
    testutil::Rng rng(42);
    for (int it = 0; it < 50; ++it) {
        int n = 2 + rng.below(12);
        Graph g = testutil::random_graph(n, 0.4, rng);
        std::vector<int> ids;
        for (int v = 0; v < n; ++v)
            if (rng.unit() < 0.5)
                ids.push_back(v);
        auto [sub, m] = induced_subgraph(g, VertexSet::of(ids, n));
        for (int a = 0; a < sub.vertex_count(); ++a)
            for (int b = a + 1; b < sub.vertex_count(); ++b)
                CHECK(sub.adjacent(a, b) ==
                      g.adjacent(m[static_cast<std::size_t>(a)], m[static_cast<std::size_t>(b)]));
    }
}

TEST_CASE("disjoint union") {
    std::vector<std::pair<int, int>> tri{{0, 1}, {1, 2}, {0, 2}};
    Graph k3 = Graph::from_edges(3, tri);
    std::vector<Graph> two{k3, k3};
    Graph u = disjoint_union(two);
    CHECK(u.vertex_count() == 6);
    CHECK(u.edge_count() == 6);
    CHECK(u.adjacent(0, 1));
    CHECK(u.adjacent(3, 4));
    CHECK(!u.adjacent(2, 3));

    CHECK(disjoint_union({}).vertex_count() == 0);

    Graph p3 = from_text("0 1\n1 2");
    Graph k2 = from_text("0 1");
    std::vector<Graph> three{p3, Graph(0), k2};
    Graph mixed = disjoint_union(three);
    CHECK(mixed.vertex_count() == 5);
    CHECK(mixed.edge_count() == 3);
}

TEST_CASE("disjoint union OR property") {
    testutil::Rng rng(7);
    for (int it = 0; it < 60; ++it) {
        int parts = 1 + rng.below(3);
        std::vector<Graph> gs;
        for (int i = 0; i < parts; ++i)
            gs.push_back(testutil::random_graph(1 + rng.below(7), 0.5, rng));
        Graph u = disjoint_union(gs);
        for (int k = 1; k <= 4; ++k) {
            bool any = false;
            for (const auto& g : gs)
                any = any || brute_force_has_clique({g, k});
            CHECK(brute_force_has_clique({u, k}) == any);
        }
    }
}

TEST_CASE("add apexes") {
    Graph p3 = from_text("0 1\n1 2");
    Graph apexed = add_apexes(p3, 1);
    CHECK(apexed.vertex_count() == 4);
    CHECK(apexed.edge_count() == 5);
    CHECK(brute_force_has_clique({p3, 2}));
    CHECK(!brute_force_has_clique({p3, 3}));
    CHECK(brute_force_has_clique({apexed, 3}));
    CHECK(!brute_force_has_clique({apexed, 4}));

    CHECK(add_apexes(p3, 0) == p3);

    Graph k2 = add_apexes(Graph(0), 2);
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    // k-shift property
    testutil::Rng rng(9);
    for (int it = 0; it < 40; ++it) {
        int n = rng.below(9);
        Graph g = testutil::random_graph(n, 0.5, rng);
        int c = 1 + rng.below(3);
        Graph plus = add_apexes(g, c);
        for (int k = 1; k <= 4; ++k)
            CHECK(brute_force_has_clique({g, k}) == brute_force_has_clique({plus, k + c}));
    }
}

TEST_CASE("round trip both formats") {
    testutil::Rng rng(1234);
    for (int it = 0; it < 220; ++it) {
        int n = rng.below(51);
        Graph g = testutil::random_graph(n, rng.unit(), rng);
        {
            std::ostringstream out;
            serialize_edge_list(g, out);
            CHECK(from_text(out.str()) == g);
        }
        {
            std::ostringstream out;
            serialize_dimacs(g, out);
            CHECK(dimacs(out.str()) == g);
        }
    }
}

TEST_CASE("vertex sets") {
    auto s = VertexSet::of({3, 1, 2}, 5);
    CHECK(s.members == std::vector<int>{1, 2, 3});
    CHECK(s.contains(2));
    CHECK(!s.contains(0));
    CHECK_THROWS_AS(VertexSet::of({1, 1}, 5), ValidationError);
    CHECK_THROWS_AS(VertexSet::of({5}, 5), ValidationError);

    auto c = set_complement(s);
    CHECK(c.members == std::vector<int>{0, 4});
    auto u = set_union(s, c);
    CHECK(u.members == std::vector<int>{0, 1, 2, 3, 4});
}
