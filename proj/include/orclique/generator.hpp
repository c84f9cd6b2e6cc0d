#pragma once

#include <cstdint>

#include "orclique/graph.hpp"

namespace orclique {

// Deterministic graph families for corpora and tests. All randomness comes
// from an internal splitmix64 stream, so output depends only on the
// arguments, not on the platform's distributions.

Graph gen_gnp(int n, double p, std::uint64_t seed);

// Random bipartite graph (sides n/2 and n-n/2) plus `extra` arbitrary edges.
Graph gen_bipartite_plus_edges(int n, double p, int extra, std::uint64_t seed);

// Random graph with maximum degree at most d; aims for target_edges edges
// and stops early when no more fit.
Graph gen_bounded_degree(int n, int d, int target_edges, std::uint64_t seed);

// G(n, p) with a clique planted on `clique_size` random vertices.
Graph gen_planted_clique(int n, double p, int clique_size, std::uint64_t seed);

Graph gen_cycle(int n);
Graph gen_complete(int n);

} // namespace orclique
