#include "orclique/generator.hpp"

#include <set>
#include <utility>
#include <vector>

#include "orclique/errors.hpp"

namespace orclique {

namespace {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

void check_n(int n) {
    if (n < 0)
        throw ValidationError("negative vertex count");
}

void check_p(double p) {
    if (p < 0.0 || p > 1.0)
        throw ValidationError("edge probability outside [0,1]");
}

} // namespace

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    check_n(n);
    check_p(p);
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p)
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph gen_bipartite_plus_edges(int n, double p, int extra, std::uint64_t seed) {
    check_n(n);
    check_p(p);
    if (extra < 0)
        throw ValidationError("negative extra edge count");
    SplitMix64 rng(seed);
    int left = n / 2;
    std::set<std::pair<int, int>> edges;
    for (int u = 0; u < left; ++u)
        for (int v = left; v < n; ++v)
            if (rng.unit() < p)
                edges.emplace(u, v);
    int added = 0;
    for (long long attempts = 50LL * extra + 100; added < extra && attempts > 0 && n >= 2;
         --attempts) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v)
            continue;
        if (edges.emplace(std::minmax(u, v)).second)
            ++added;
    }
    std::vector<std::pair<int, int>> list(edges.begin(), edges.end());
    return Graph::from_edges(n, list);
}

Graph gen_bounded_degree(int n, int d, int target_edges, std::uint64_t seed) {
    check_n(n);
    if (d < 0 || target_edges < 0)
        throw ValidationError("negative parameter");
    SplitMix64 rng(seed);
    std::set<std::pair<int, int>> edges;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    int added = 0;
    for (long long attempts = 50LL * target_edges + 100;
         added < target_edges && attempts > 0 && n >= 2; --attempts) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v || deg[static_cast<std::size_t>(u)] >= d || deg[static_cast<std::size_t>(v)] >= d)
            continue;
        if (edges.emplace(std::minmax(u, v)).second) {
            ++added;
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
        }
    }
    std::vector<std::pair<int, int>> list(edges.begin(), edges.end());
    return Graph::from_edges(n, list);
}

Graph gen_planted_clique(int n, double p, int clique_size, std::uint64_t seed) {
    check_n(n);
    check_p(p);
    if (clique_size < 0 || clique_size > n)
        throw ValidationError("planted clique size outside 0..n");
    SplitMix64 rng(seed);
    std::set<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p)
                edges.emplace(u, v);
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        ids[static_cast<std::size_t>(v)] = v;
    for (int i = 0; i < clique_size; ++i) {
        int j = i + rng.below(n - i);
        std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < clique_size; ++i)
        for (int j = i + 1; j < clique_size; ++j)
            edges.emplace(std::minmax(ids[static_cast<std::size_t>(i)],
                                      ids[static_cast<std::size_t>(j)]));
    std::vector<std::pair<int, int>> list(edges.begin(), edges.end());
    return Graph::from_edges(n, list);
}

Graph gen_cycle(int n) {
    check_n(n);
    std::vector<std::pair<int, int>> edges;
    if (n == 2)
        edges.emplace_back(0, 1);
    else if (n >= 3) {
        for (int v = 0; v + 1 < n; ++v)
            edges.emplace_back(v, v + 1);
        edges.emplace_back(0, n - 1);
    }
    return Graph::from_edges(n, edges);
}

Graph gen_complete(int n) {
    check_n(n);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

} // namespace orclique
