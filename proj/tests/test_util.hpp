#pragma once

// Shared helpers for the test suites: a deterministic RNG and the
// independent oracles the expected values are computed with. Everything here
// is test-only and stays away from the library's algorithm code paths.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "orclique/graph.hpp"

namespace testutil {

struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline orclique::Graph random_graph(int n, double p, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p)
                edges.emplace_back(u, v);
    return orclique::Graph::from_edges(n, edges);
}

// Minimum over all orderings of the maximum back-degree, as a subset DP:
// g(S) = best possible max back-degree when S is arranged as a suffix, the
// first suffix vertex seeing its neighbors inside S.
inline int degeneracy_by_ordering_dp(const orclique::Graph& g) {
    int n = g.vertex_count();
    if (n == 0)
        return 0;
    std::vector<int> best(std::size_t{1} << n, 0);
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
        int value = n + 1;
        for (int v = 0; v < n; ++v) {
            if (!(s & (std::uint32_t{1} << v)))
                continue;
            std::uint32_t rest = s & ~(std::uint32_t{1} << v);
            int back = 0;
            for (int u : g.neighbors(v))
                if (rest & (std::uint32_t{1} << u))
                    ++back;
            value = std::min(value, std::max(back, best[rest]));
        }
        best[s] = value;
    }
    return best[(std::size_t{1} << n) - 1];
}

// Literal enumeration of all vertex orderings; cross-check for the DP.
inline int degeneracy_by_all_permutations(const orclique::Graph& g) {
    int n = g.vertex_count();
    if (n == 0)
        return 0;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = n + 1;
    do {
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
        int worst = 0;
        for (int v = 0; v < n; ++v) {
            int back = 0;
            for (int u : g.neighbors(v))
                if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)])
                    ++back;
            worst = std::max(worst, back);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Exhaustive induced-cycle search: some vertex subset of size >= 4 induces a
// connected 2-regular subgraph.
inline bool has_long_induced_cycle(const orclique::Graph& g) {
    int n = g.vertex_count();
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (s & (std::uint32_t{1} << v))
                verts.push_back(v);
        if (verts.size() < 4)
            continue;
        bool regular = true;
        for (int v : verts) {
            int deg = 0;
            for (int u : verts)
                if (u != v && g.adjacent(u, v))
                    ++deg;
            if (deg != 2) {
                regular = false;
                break;
            }
        }
        if (!regular)
            continue;
        // connectivity of the induced subgraph
        std::vector<int> stack{verts[0]};
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        seen[static_cast<std::size_t>(verts[0])] = true;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : verts)
                if (!seen[static_cast<std::size_t>(u)] && g.adjacent(u, v)) {
                    seen[static_cast<std::size_t>(u)] = true;
                    stack.push_back(u);
                    ++reached;
                }
        }
        if (reached == static_cast<int>(verts.size()))
            return true;
    }
    return false;
}

inline bool is_induced_cycle(const orclique::Graph& g, const std::vector<int>& cycle) {
    int len = static_cast<int>(cycle.size());
    if (len < 3)
        return false;
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.adjacent(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>(j)]) !=
                consecutive)
                return false;
        }
    return true;
}

inline bool subset_leaves_bipartite(const orclique::Graph& g, std::uint32_t kill) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if ((kill & (std::uint32_t{1} << s)) || color[static_cast<std::size_t>(s)] != -1)
            continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (kill & (std::uint32_t{1} << w))
                    continue;
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Minimum odd cycle transversal by subset enumeration (n <= ~16).
inline int min_oct_by_enumeration(const orclique::Graph& g) {
    int n = g.vertex_count();
    for (int size = 0; size <= n; ++size)
        for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
            if (std::popcount(s) != size)
                continue;
            if (subset_leaves_bipartite(g, s))
                return size;
        }
    return n;
}

// Minimum bounded-degree modulator by subset enumeration (n <= ~16).
inline int min_bounded_degree_modulator_by_enumeration(const orclique::Graph& g, int d) {
    int n = g.vertex_count();
    for (int size = 0; size <= n; ++size)
        for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
            if (std::popcount(s) != size)
                continue;
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                if (s & (std::uint32_t{1} << v))
                    continue;
                int deg = 0;
                for (int u : g.neighbors(v))
                    if (!(s & (std::uint32_t{1} << u)))
                        ++deg;
                ok = deg <= d;
            }
            if (ok)
                return size;
        }
    return n;
}

// Treewidth by simulating elimination under every permutation (n <= 8).
inline int treewidth_by_elimination_perms(const orclique::Graph& g) {
    int n = g.vertex_count();
    if (n == 0)
        return -1;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = n;
    do {
        std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                           std::vector<bool>(static_cast<std::size_t>(n), false));
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v))
                adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
        std::vector<bool> alive(static_cast<std::size_t>(n), true);
        int width = 0;
        for (int v : perm) {
            std::vector<int> nbrs;
            for (int u = 0; u < n; ++u)
                if (alive[static_cast<std::size_t>(u)] && u != v &&
                    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
                    nbrs.push_back(u);
            width = std::max(width, static_cast<int>(nbrs.size()));
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                    adj[static_cast<std::size_t>(nbrs[i])][static_cast<std::size_t>(nbrs[j])] = true;
                    adj[static_cast<std::size_t>(nbrs[j])][static_cast<std::size_t>(nbrs[i])] = true;
                }
            alive[static_cast<std::size_t>(v)] = false;
        }
        best = std::min(best, width);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All maximal cliques by plain recursion (n <= ~10).
inline void maximal_cliques_rec(const orclique::Graph& g, std::vector<int>& r,
                                std::vector<int> p, std::vector<int> x,
                                std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    while (!p.empty()) {
        int v = p.front();
        std::vector<int> np, nx;
        for (int u : p)
            if (g.adjacent(u, v))
                np.push_back(u);
        for (int u : x)
            if (g.adjacent(u, v))
                nx.push_back(u);
        r.push_back(v);
        maximal_cliques_rec(g, r, np, nx, out);
        r.pop_back();
        p.erase(p.begin());
        x.push_back(v);
    }
}

inline std::vector<std::vector<int>> maximal_cliques(const orclique::Graph& g) {
    std::vector<int> r, p, x;
    for (int v = 0; v < g.vertex_count(); ++v)
        p.push_back(v);
    std::vector<std::vector<int>> out;
    maximal_cliques_rec(g, r, p, x, out);
    return out;
}

// Random chordal graph: the id order 0..n-1 is a perfect elimination
// ordering by construction (every vertex attaches to a subset of an existing
// clique). The top `plant` vertices form a complete seed, so the max clique
// is at least min(plant, n).
inline orclique::Graph random_chordal(int n, int plant, Rng& rng) {
    plant = std::min(plant, n);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> later_clique(static_cast<std::size_t>(n));
    for (int i = 0; i < plant; ++i) {
        int u = n - plant + i;
        for (int w = u + 1; w < n; ++w) {
            edges.emplace_back(u, w);
            later_clique[static_cast<std::size_t>(u)].push_back(w);
        }
    }
    for (int v = n - plant - 1; v >= 0; --v) {
        int later = n - 1 - v;
        if (later == 0)
            continue;
        int anchor = v + 1 + rng.below(later);
        std::vector<int> pool = later_clique[static_cast<std::size_t>(anchor)];
        pool.push_back(anchor);
        std::vector<int> chosen;
        for (int u : pool)
            if (rng.unit() < 0.6)
                chosen.push_back(u);
        if (chosen.empty())
            chosen.push_back(anchor);
        for (int u : chosen)
            edges.emplace_back(v, u);
        later_clique[static_cast<std::size_t>(v)] = std::move(chosen);
    }
    return orclique::Graph::from_edges(n, edges);
}

} // namespace testutil
