#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orclique/generator.hpp"
#include "orclique/solver.hpp"
#include "test_util.hpp"

using namespace orclique;

namespace {

// subset-enumeration oracle, independent of both library solvers
bool enumerate_k_subsets(const Graph& g, int k) {
    int n = g.vertex_count();
    if (k > n)
        return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        bool clique = true;
        for (int i = 0; i < k && clique; ++i)
            for (int j = i + 1; j < k && clique; ++j)
                if (!g.adjacent(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]))
                    clique = false;
        if (clique)
            return true;
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos)
            --pos;
        if (pos < 0)
            return false;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);         // outer C5
        e.emplace_back(i, i + 5);               // spokes
        e.emplace_back(i + 5, 5 + (i + 2) % 5); // inner pentagram
    }
    return Graph::from_edges(10, e);
}

} // namespace

TEST_CASE("has_clique basics") {
    CHECK(has_clique({gen_complete(4), 4}) == SolveResult::Yes);
    CHECK(has_clique({gen_complete(4), 5}) == SolveResult::No);
    CHECK(has_clique({gen_cycle(5), 3}) == SolveResult::No);
    CHECK(has_clique({petersen(), 3}) == SolveResult::No);
    CHECK(has_clique({petersen(), 2}) == SolveResult::Yes);
    CHECK(has_clique({Graph(0), 1}) == SolveResult::No);
    CHECK(has_clique({Graph(1), 1}) == SolveResult::Yes);
    CHECK(has_clique({Graph(3), 2}) == SolveResult::No);
}

TEST_CASE("seed-fixed random instance matches subset enumeration") {
    Graph g = gen_gnp(20, 0.5, 2024);
    CHECK((has_clique({g, 5}) == SolveResult::Yes) == enumerate_k_subsets(g, 5));
}

TEST_CASE("budget cap") {
    Graph g = gen_gnp(30, 0.5, 5);
    CHECK(has_clique({g, 5}, SolveBudget::nodes(1)) == SolveResult::BudgetExceeded);
    CHECK(has_clique({g, 5}, SolveBudget::nodes(1u << 22)) != SolveResult::BudgetExceeded);
    // short circuits don't consume budget
    CHECK(has_clique({g, 1}, SolveBudget::nodes(1)) == SolveResult::Yes);
    CHECK(has_clique({g, 2}, SolveBudget::nodes(1)) == SolveResult::Yes);
}

TEST_CASE("brute force basics") {
    CHECK(brute_force_has_clique({gen_complete(5), 5}));
    CHECK(!brute_force_has_clique({Graph(0), 1}));
    CHECK(brute_force_has_clique({Graph(1), 1}));
    CHECK(!brute_force_has_clique({gen_cycle(7), 3}));
}

TEST_CASE("solver agreement on 1000 random instances") {
    const double probs[] = {0.1, 0.3, 0.5, 0.8};
    testutil::Rng rng(31337);
    for (int it = 0; it < 1000; ++it) {
        int n = 1 + rng.below(25);
        double p = probs[it % 4];
        Graph g = testutil::random_graph(n, p, rng);
        int k = 1 + rng.below(7);
        CliqueInstance inst{g, k};
        CHECK((has_clique(inst) == SolveResult::Yes) == brute_force_has_clique(inst));
    }
}

TEST_CASE("monotonicity properties") {
    testutil::Rng rng(99);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + rng.below(18);
        Graph g = testutil::random_graph(n, 0.4, rng);
        for (int k = 2; k <= 6; ++k)
            if (has_clique({g, k}) == SolveResult::Yes)
                CHECK(has_clique({g, k - 1}) == SolveResult::Yes);

        // Yes on an induced subgraph implies Yes on the host
        std::vector<int> ids;
        for (int v = 0; v < n; ++v)
            if (rng.unit() < 0.6)
                ids.push_back(v);
        auto [sub, map] = induced_subgraph(g, VertexSet::of(ids, n));
        for (int k = 1; k <= 4; ++k)
            if (has_clique({sub, k}) == SolveResult::Yes)
                CHECK(has_clique({g, k}) == SolveResult::Yes);
    }
}
