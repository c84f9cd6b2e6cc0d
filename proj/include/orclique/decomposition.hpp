#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "orclique/graph.hpp"

namespace orclique {

// Peeling order: order[i] is the i-th removed vertex; every vertex has at
// most `degeneracy` neighbors of higher position, and the bound is tight.
struct DegeneracyOrdering {
    std::vector<int> order;
    int degeneracy = 0;
};

// Exact degeneracy by repeatedly removing a minimum-degree vertex (ties by
// smallest id).
DegeneracyOrdering degeneracy_ordering(const Graph& g);

// pos[v] = position of v in ord.order.
std::vector<int> order_positions(const DegeneracyOrdering& ord);

// {v} plus the neighbors of v placed after it; at most degeneracy+1 vertices.
VertexSet later_closed_neighborhood(const Graph& g, const DegeneracyOrdering& ord, int v);

struct BipartitenessResult {
    bool bipartite = false;
    std::vector<int> coloring;  // per-vertex 0/1 when bipartite
    std::vector<int> odd_cycle; // simple odd cycle (vertex list) when not
};

BipartitenessResult is_bipartite(const Graph& g);

// Blocks are the maximal 2-connected subgraphs plus bridges (2-vertex
// blocks) and isolated vertices (1-vertex blocks); every edge lies in
// exactly one block and sum of block sizes <= n + 2m.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
};

BlockDecomposition block_decomposition(const Graph& g);

// Order in which each vertex's later neighbors induce a clique.
struct PerfectEliminationOrdering {
    std::vector<int> order;
};

struct ChordalityResult {
    bool chordal = false;
    PerfectEliminationOrdering peo; // set when chordal
    std::vector<int> hole;          // induced cycle of length >= 4 when not
};

// Lex-BFS followed by the standard elimination check; on failure extracts a
// chordless cycle witness.
ChordalityResult chordality_check(const Graph& g);

struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges; // bag index pairs

    int width() const;
};

// Min-fill elimination ordering heuristic (ties: smaller degree, then
// smaller id). Always valid; achieved width is reported, not promised.
TreeDecomposition heuristic_tree_decomposition(const Graph& g);

// Contracts tree edges whose bags are in containment relation until at most
// n bags remain (width and validity preserved).
TreeDecomposition reduce_bag_count(const TreeDecomposition& td, const Graph& g);

struct TdValidation {
    bool valid = false;
    std::string violation; // names the failed condition and a witness
};

TdValidation validate_tree_decomposition(const TreeDecomposition& td, const Graph& g);

// PACE-style .td text format (1-based ids).
void serialize_tree_decomposition(const TreeDecomposition& td, const Graph& g, std::ostream& out);

} // namespace orclique
